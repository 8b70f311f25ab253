# Configs package for the commuting-scheme laboratory
