from padicdyn import cookbook
from padicdyn.classifier import classify, critical_data, variant_key


def test_shipped_table_is_reproducible():
    assert cookbook.load() == cookbook.search()
    with open(cookbook.__file__.replace("cookbook.py", "data/cookbook.json")) as fh:
        assert fh.read() == cookbook.dump(cookbook.search())


def test_every_entry_realizes_its_key():
    table = cookbook.load()
    assert set(table) == set(cookbook.VARIANT_KEYS)
    for key in table:
        data = critical_data(cookbook.params_for(key))
        assert variant_key(classify(data), data) == key
        assert not any(r.is_zero for r in (data.alpha, data.beta, data.delta, data.cap_a))


def test_degenerate_search_also_covers_everything():
    assert set(cookbook.search(nondegenerate=False, max_height=3)) == set(cookbook.VARIANT_KEYS)


def test_heights_grow_in_order():
    vals = list(cookbook.candidate_values(3, 3))
    heights = [max(abs(v.numerator), v.denominator) for v in vals]
    assert heights == sorted(heights)
    assert len(vals) == len(set(vals))
