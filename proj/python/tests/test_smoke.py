import json

import pytest

import domtile as d


def test_census():
    assert d.census() == {"full": 50625, "self_paired": 135, "classes": 25380, "det_symbols": 256, "det_classes": 128}


def test_symbols():
    s = d.Symbol("0231")
    assert str(s) == "0231"
    assert s.is_deterministic()
    assert s.shift(1).shift(1) == s
    assert d.equivalent(s, s.partner())
    assert d.Symbol("0011").prop2_class() != d.Symbol("0123").prop2_class()
    with pytest.raises(ValueError):
        d.Symbol("01x3")


def test_tilesets():
    assert len(d.catalogue("T1")) == 27
    assert d.closure(["pi"]) == d.catalogue("T_Pi")
    assert len(d.synthesize(d.Symbol("1101"))) == 67
    assert len(d.synthesize(d.Symbol("1023"))) == 65
    t = d.synthesize(d.Symbol("1023"))
    assert d.tileset_from_json(t.to_json()) == t
    assert "[13|00]" in t
    assert d.oracle_mismatches() == []


def test_patches():
    s = d.Symbol("0231")
    p = d.expand(s, 3)
    assert len(p) == 64
    assert d.deflate(p, s) == d.expand(s, 2)
    assert d.congruent(d.flip_v_relabel(d.expand(s, 2)), d.expand(s.partner(), 2))
    assert d.parse_ascii(p.ascii()) == p
    assert d.domino_patch_from_json(p.to_json()) == p
    assert len(d.patch_dict(p)["dominoes"]) == 64
    assert p.svg().count("<rect") == 64


def test_solver():
    assert d.count_tilings(d.catalogue("T_Pi"), 2, 2) == 3616
    r = d.torus_search(d.synthesize(d.Symbol("1101")), 4, 4)
    assert r["status"] == "NONE"
    assert r["witness"] is None


def test_supertiles():
    for ctx in (["pibar"], ["pi", "par", "xi", "pibar"], "1101"):
        r = d.marked_supertile(ctx, 1)
        assert r["violations"] == 0
        assert len(json.loads(r["patch"])["cells"]) == 15 * 7
    with pytest.raises(ValueError):
        d.marked_supertile("1023", d.max_supertile_level() + 1)
