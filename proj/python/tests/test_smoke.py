import math

import pytest

import fanfree


def test_construct_round_trip():
    g6 = fanfree.construct("cycle", [5])
    assert fanfree.vertex_count(g6) == 5
    assert fanfree.edge_count(g6) == 5
    # C5 relabeled any way is still C5
    assert fanfree.canonical_g6(g6) == fanfree.canonical_g6(fanfree.construct("cycle", [5]))


def test_extremal_graph_certificate():
    g6 = fanfree.extremal_graph(2, 89)
    cert = fanfree.spectral_radius(g6)
    target = (1 + math.sqrt(4 * 89 - 3)) / 2
    assert cert["lambda_hi"] - cert["lambda_lo"] <= 1e-10
    assert cert["lambda_lo"] <= target <= cert["lambda_hi"]
    assert len(cert["perron"]) == fanfree.vertex_count(g6)


def test_conjecture_bound():
    assert fanfree.conjecture_bound(2, 89) == pytest.approx((1 + math.sqrt(353)) / 2, abs=1e-15)
    with pytest.raises(ValueError):
        fanfree.conjecture_bound(1, 5)


def test_contains_fan():
    k6 = fanfree.construct("complete", [6])
    w = fanfree.contains_fan(k6, 6)
    assert w is not None
    assert len(w["path"]) == 5
    assert fanfree.contains_fan(fanfree.extremal_graph(2, 9), 6) is None


def test_enumerate_classes():
    classes = fanfree.enumerate_classes(4)
    assert len(classes) == 5
    assert len(set(classes)) == 5
    assert fanfree.canonical_g6(fanfree.construct("star", [4])) in classes


def test_local_search():
    rep = fanfree.local_search(5, restarts=8, seed=3)
    assert rep["lambda_lo"] == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-9)
    assert fanfree.canonical_g6(rep["best_g6"]) == fanfree.canonical_g6(
        fanfree.extremal_graph(2, 5)
    )


def test_audit_equality_case():
    report = fanfree.audit(fanfree.extremal_graph(2, 9), 6)
    assert report["hypothesis_holds"]
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["inequality-1"]["holds"]
    assert by_name["equality-signature"]["holds"]
    assert report["decomposition"]["u_star"] == 0


def test_rotation_lemma_sample():
    rep = fanfree.check_rotation_lemma(20, 4, 8, seed=5)
    assert rep["violations"] == 0
    assert rep["trials"] == 20


def test_verification_csv():
    csv = fanfree.verification_csv(2, [5, 9])
    lines = csv.strip().splitlines()
    assert lines[0] == "k,m,n,graph6,lambda_lo,lambda_hi,bound,satisfies_bound,method"
    assert len(lines) == 3
    assert lines[1].split(",")[-1] == "exhaustive"


def test_error_mapping():
    with pytest.raises(ValueError):
        fanfree.construct("moebius", [5])
    with pytest.raises(ValueError):
        fanfree.spectral_radius("not graph6ZZZ")
    with pytest.raises(RuntimeError):
        fanfree.enumerate_classes(40)
    with pytest.raises(ValueError):
        fanfree.extremal_graph(2, 88)
