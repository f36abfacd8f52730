import pytest

from conftest import cached_dec
from liecert import catalog
from liecert import triple as tr


def test_every_realizable_entry_builds():
    for e in catalog.entries():
        if not e.realizable:
            continue
        p = e.p_min if e.parametrized else None
        t = catalog.build(e.id, p)
        t.validate()


def test_expected_dims_roundtrip():
    for (eid, p), expected in catalog.EXPECTED_DIMS.items():
        dims = cached_dec(eid, p).dims()
        for key, val in expected.items():
            assert dims[key] == val, (eid, p, key, dims[key], val)


def test_unrealizable_entries_raise():
    for eid in ("f4-case", "e6-spin10", "e8-su2-e7", "spin7plus-so8-quotient"):
        with pytest.raises(catalog.UnrealizableFamilyError):
            catalog.build(eid)


def test_unknown_entry():
    with pytest.raises(catalog.UnknownEntryError):
        catalog.entry("so-called-nonsense")


def test_p_range_validation():
    with pytest.raises(ValueError):
        catalog.build("spin7plus-so8", 3)
    with pytest.raises(ValueError):
        catalog.build("spin-octonion-case2", 0)
    with pytest.raises(ValueError):
        catalog.build("su3-su4-spin7", 1)
    with pytest.raises(ValueError):
        catalog.build("sp-series", None)


def test_parse_entry_id():
    assert catalog.parse_entry_id("sp-series:p=2") == ("sp-series", 2)
    assert catalog.parse_entry_id("su3-su4-spin7") == ("su3-su4-spin7", None)
    # spec'd alias
    assert catalog.parse_entry_id("g2-so0-7-in-so8") == ("g2-spin7", 0)


def test_list_entries_filters():
    rank8 = {e.id for e in catalog.list_entries(rank=8, realizable=True)}
    assert {"spin7plus-so8", "g2-spin7", "su3-su4-spin7"} <= rank8
    violations = {e.id for e in catalog.list_entries(expected="violation")}
    assert {
        "spin-octonion-case1",
        "spin-octonion-case2",
        "spin-octonion-case4",
    } <= violations
    unreal = {e.id for e in catalog.list_entries(realizable=False)}
    assert {"f4-case", "f4-spin9", "e6-spin10", "e7-spin12", "e8-spin16"} <= unreal
    # deterministic order
    ids = [e.id for e in catalog.list_entries()]
    assert ids == sorted(ids)


def test_completeness_against_source_tags():
    covered = set()
    for e in catalog.entries():
        covered.update(e.source)
    required = (
        [f"certified-list/{a}" for a in range(1, 5)]
        + [f"violating-family/{a}" for a in (1, 2, 3, 4)]
        + [f"symmetric-table/{a}" for a in range(1, 17)]
        + ["rank8-list/1", "rank8-list/2", "rank8-list/3", "rank8-list/4a", "rank8-list/4b", "rank8-list/4c"]
        + ["rank6-list/1", "rank6-list/2"]
        + ["rank3-list/1", "rank3-list/2"]
        + [f"rank4-list/{a}" for a in range(1, 5)]
        + ["limit-example"]
    )
    missing = [tag for tag in required if tag not in covered]
    assert not missing, missing
    # each tag appears, and every entry id is unique
    ids = [e.id for e in catalog.entries()]
    assert len(ids) == len(set(ids))


def test_sphere_rows_reproduced_by_decompositions():
    # the stabilizer rows fix (k0, h0, h1, m1) for the families realized here
    by_row = {
        8: ("g2-spin7", 0, {"k0": 21, "h0": 14, "h1": 14, "m1": 7}),
        1: ("spin7plus-so8", 0, {"k0": 28, "h0": 21, "h1": 21, "m1": 7}),
        2: ("su3-su4-spin7", None, {"k0": 15, "h0": 8, "h1": 9, "m1": 6}),
        3: ("su3-long-root", 1, {"k0": 10, "h0": 3, "h1": 6, "m1": 4}),
    }
    for row, (eid, p, want) in by_row.items():
        dims = cached_dec(eid, p).dims()
        for key, val in want.items():
            assert dims[key] == val, (row, eid, key)


def test_quotient_entries_reduce_to_realizable_cores():
    for e in catalog.entries():
        if e.reduces_to is not None:
            core = catalog.entry(e.reduces_to)
            assert core.realizable


def test_witness_defaults():
    t, X, Y = catalog.build_with_witness("spin-octonion-case4", None)
    assert t.ambient_dim == 12  # default p = 3
    with pytest.raises(catalog.UnrealizableFamilyError):
        catalog.build_with_witness("g2-spin7", 0)  # certified family: no witness


def test_catalog_json_export():
    listing = catalog.to_json()
    assert all({"id", "realizable", "source"} <= set(e) for e in listing)
    assert any(e["id"] == "remark-limit" for e in listing)
