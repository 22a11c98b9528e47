from fractions import Fraction
from pathlib import Path

import pytest

import hfalgebra as hf

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def test_means_are_exact():
    assert hf.Hfe(["0.9", "0.2"]).mean() == Fraction(11, 20)
    assert hf.Hfe(["0.6", "0.6", "0.5"]).mean() == Fraction(17, 30)
    assert hf.Hfe([Fraction(1, 3), "1/3", 1]).mean() == Fraction(5, 9)


def test_hfe_is_a_multiset():
    h = hf.Hfe(["0.3", "0.6", "0.5"])
    assert h.degrees == [Fraction(3, 5), Fraction(1, 2), Fraction(3, 10)]
    assert h == hf.Hfe(["0.6", "0.5", "0.3"])
    assert h != hf.Hfe(["0.6", "0.5", "0.3", "0.3"])
    assert len(hf.Hfe(["0.5", "0.5"])) == 2
    assert h.bounds() == (Fraction(3, 10), Fraction(3, 5))
    assert str(h) == "{0.6, 0.5, 0.3}"


def test_bad_degrees():
    with pytest.raises(TypeError):
        hf.Hfe([0.5])
    with pytest.raises(hf.Error):
        hf.Hfe(["1.5"])
    with pytest.raises(hf.Error):
        hf.Hfe([])


def test_operations():
    a, b = hf.Hfe(["0.1", "0.8"]), hf.Hfe(["0.7", "0.9"])
    assert hf.intersection(a, b) == hf.Hfe(["0.8", "0.7", "0.1"])
    assert hf.union(hf.Hfe(["0.1", "0.8"]), hf.Hfe(["0.1", "0.9"])) == hf.Hfe(["0.9", "0.8", "0.1", "0.1"])
    assert hf.complement(hf.Hfe(["0.1", "0.1", "0.41"])) == hf.Hfe(["0.9", "0.9", "0.59"])
    w = hf.Hfe(["0.9", "0.8", "0.7", "0.65", "0.6", "0.5"])
    assert hf.best_q(w, 2) == hf.Hfe(["0.9", "0.8"])


def test_relations():
    x1, x5 = hf.Hfe(["0.9", "0.2"]), hf.Hfe(["0.9", "0.3", "0.1"])
    assert hf.relation("t", x1, x5)
    assert not hf.relation("s", x1, x5)
    profile = hf.relation_profile(x1, x5)
    assert profile["sot"] == "T"
    assert profile["p"] and not profile["n"]
    with pytest.raises(hf.Error):
        hf.relation("q", x1, x5)


def test_document():
    doc = hf.load_document(str(DATA / "equality.json"))
    assert doc.universe == ["x", "y"]
    assert doc.set_names == ["A", "B", "C"]
    assert doc.equal("s", "A", "B")
    assert not doc.equal("s", "A", "C")
    assert doc.includes("s", "C", "A")
    result = doc.evaluate("(A|B)&C")
    assert result["x"].mean() == Fraction(9, 20)
    assert hf.parse_document(doc.to_json()) == doc
    with pytest.raises(hf.DocumentError, match="sets.A.y"):
        hf.parse_document('{"universe": ["x", "y"], "sets": {"A": {"x": ["0.1"]}}}')
    with pytest.raises(hf.Error):
        doc.equal("t", "A", "B")


def test_rank():
    doc = hf.load_document(str(DATA / "schemes.json"))
    ranking = hf.rank(doc, "H", "m")
    assert ranking["layers"][0] == ["x6"]
    with pytest.raises(hf.Error):
        hf.rank(doc, "H", "t")


def test_laws_and_suite():
    ids = {law["id"]: law for law in hf.laws()}
    assert sum(law["status"] == "proved" for law in ids.values()) >= 95
    assert ids["exam-sec2.6-distrib-m"]["status"] == "refuted"
    report = hf.run_suite(trials=50, laws=["thm1.1", "prop13.1"])
    assert report["summary"]["passed"] is True
    assert [law["id"] for law in report["laws"]] == ["thm1.1", "prop13.1"]
    assert hf.run_suite(trials=30, laws=["thm1.2"]) == hf.run_suite(trials=30, laws=["thm1.2"], threads=2)


def test_hunt_and_replay():
    assert hf.hunt("prop13.1", trials=500) is None
    witness = hf.hunt("exam-sec2.3-m-intersection")
    assert witness is not None
    assert (witness["guard"], witness["claim"]) == (True, False)
    assert hf.evaluate_law(witness["law"], witness["binding"]) == (True, False)
    with pytest.raises(hf.Error):
        hf.hunt("no-such-law")


def test_law_table_matches_registry():
    table = Path(__file__).resolve().parents[2] / "docs" / "laws.md"
    rows = [line.split("|")[1:3] for line in table.read_text(encoding="utf-8").splitlines() if line.startswith("| `")]
    documented = [(cell.strip().strip("`"), status.strip()) for cell, status in rows]
    assert documented == [(law["id"], law["status"]) for law in hf.laws()]
