from cache.golden_store import GoldenStore


def test_store_then_compare(tmp_path):
    store = GoldenStore(str(tmp_path))
    assert store.get("I2") is None
    assert store.compare_or_store("I2", "a\nb\n")
    assert store.get("I2") == "a\nb\n"
    assert store.compare_or_store("I2", "a\nb\n")
    assert not store.compare_or_store("I2", "a\n")


def test_unsafe_keys_are_flattened(tmp_path):
    store = GoldenStore(str(tmp_path))
    path = store.put("dimension/J(1)+(t,w1)", "x\n")
    assert path.startswith(str(tmp_path))
    assert path.endswith("dimension_J_1_+_t_w1_.gb")
    assert store.get("dimension/J(1)+(t,w1)") == "x\n"


def test_invalidate(tmp_path):
    store = GoldenStore(str(tmp_path))
    store.put("k", "x\n")
    store.invalidate("k")
    assert store.get("k") is None
    store.invalidate("k")


def test_no_temp_files_left(tmp_path):
    store = GoldenStore(str(tmp_path))
    store.put("k", "x\n")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["k.gb"]
