import json

import pytest

from dlct import suites


@pytest.mark.parametrize("name, max_n", [
    ("identities", 8), ("families", 12), ("catalog", None), ("bounds", 8), ("equivalence", 8), ("duals", 9),
])
def test_suite_passes(name, max_n):
    records = suites.run(name, seed=7, max_n=max_n)
    assert records
    failed = [r for r in records if not r["pass"]]
    assert not failed, failed
    json.dumps(records)  # JSON-ready


def test_suite_records_are_deterministic():
    a = suites.run("equivalence", seed=3, max_n=5)
    b = suites.run("equivalence", seed=3, max_n=5)
    assert json.dumps(a) == json.dumps(b)
    assert all(r["check"].startswith("equivalence.") for r in a)


def test_unknown_suite():
    with pytest.raises(KeyError):
        suites.run("nope")
