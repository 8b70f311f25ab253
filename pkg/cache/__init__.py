# Golden-file persistence for reduced bases
