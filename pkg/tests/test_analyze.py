from __future__ import annotations

from resolvekit.analyze import analyze_certificate, check_structural_constraints, constraint_report
from resolvekit.core import Certificate


def test_example1_decomposition(example1):
    rep = analyze_certificate(example1)
    # columns are 0-based: s1,s3,s4,s6,s7 -> A
    assert rep.A == {0, 2, 3, 5, 6}
    assert rep.B == {1, 4, 7}
    assert (rep.eAA, rep.eAB, rep.eBB) == (1, 1, 3)
    # rows 5 and 12 are AAB triples, row 13 is the AAA triple
    assert rep.triples == (1, 2, 0, 0)
    assert rep.profile[2] == rep.eAA + rep.eAB + rep.eBB
    assert rep.profile[3] == sum(rep.triples)
    assert rep.eAB == len(rep.B1)
    assert rep.duplicate_weight2 == 0


def test_example1_constraints(example1):
    assert check_structural_constraints(example1) == []
    report = constraint_report(example1)
    assert all(v == "pass" for v in report.values())


def test_single_subset():
    cert = Certificate.from_lists(5, 3, [[1, 2, 3]])
    rep = analyze_certificate(cert)
    assert rep.A == {0} and not rep.gamma_edges
    fails = check_structural_constraints(cert)
    assert "d0<=1" in fails


def test_equal_weight_one_rows():
    cert = Certificate.from_lists(4, 3, [[1, 2, 3]])
    assert "distinct-weight1-rows" in check_structural_constraints(cert)


def test_k3_only_constraints_skipped_for_other_k():
    cert = Certificate.from_lists(9, 4, [[1, 2, 3, 4], [5, 6, 7, 8]])
    report = constraint_report(cert)
    assert report["no-B1-path"].startswith("skipped")
    assert report["ell-bound-d1"].startswith("skipped")


def test_duplicate_weight2_counted():
    cert = Certificate.from_lists(6, 3, [[1, 2, 3], [1, 2, 4]])
    rep = analyze_certificate(cert)
    assert rep.duplicate_weight2 == 1
    assert rep.profile[2] == len(rep.gamma_edges) + rep.duplicate_weight2
