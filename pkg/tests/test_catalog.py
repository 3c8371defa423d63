"""Catalog completeness and the spec-level cross-theorem properties."""

from fractions import Fraction

import pytest

from cyclekit.catalog import catalog, get
from cyclekit.registry import Profile, check
from conftest import seeded_gnp


def test_catalog_size_and_ids():
    cat = catalog()
    assert len(cat) >= 60
    ids = [s.id for s in cat]
    assert len(ids) == len(set(ids))
    for i in range(1, 20):
        assert f"T{i}" in ids
    for i in range(1, 58):
        assert f"Thm{i}" in ids
    for extra in ("Ore", "Fan", "g1", "g4", "f1", "f2"):
        assert extra in ids


def test_quarantine_membership_is_data():
    quarantined = {s.id for s in catalog() if s.quarantined}
    assert quarantined == {"T7"}


def test_n_floors():
    assert get("Thm8").n_floor == 11
    assert get("Thm23").n_floor == 10
    assert get("T1").n_floor == 3


def test_lookup_unknown_id():
    with pytest.raises(KeyError):
        get("Thm99")


def test_parameterized_entries():
    for tid in ("T17", "Thm14", "Thm36", "Thm42", "Thm43", "Thm44", "Thm51", "Thm57", "g1"):
        assert get(tid).lambdas is not None, tid
    for tid in ("T1", "Thm6", "Thm31"):
        assert get(tid).lambdas is None, tid


def test_chain_inequalities():
    """kappa <= delta <= sigma_2/2 <= sigma_3/3 and delta <= delta_2 (connected)."""
    for g in seeded_gnp(8, 0.4, 60, seed=101) + seeded_gnp(7, 0.7, 60, seed=102):
        pf = Profile(g)
        if not pf.connected:
            continue
        assert pf.kappa <= pf.delta
        if pf.sigma2 != float("inf"):
            assert Fraction(pf.delta) <= pf.sigma2 / 2
        if pf.sigma2 != float("inf") and pf.sigma3 != float("inf"):
            assert pf.sigma2 / 2 <= pf.sigma3 / 3
        if pf.delta2 != float("inf"):
            assert pf.delta <= pf.delta2


def test_bound_dominance():
    """T3's min{n, sigma_2} >= T2's min{n, 2delta}; T15 >= T5 likewise."""
    for g in seeded_gnp(9, 0.5, 80, seed=103):
        pf = Profile(g)
        if pf.kappa >= 2:
            assert min(pf.n, pf.sigma2) >= min(pf.n, 2 * pf.delta)
        if pf.kappa >= 3:
            assert min(pf.n, pf.sigma3 - pf.kappa) >= min(pf.n, 3 * pf.delta - pf.kappa)


def test_monotone_applicability_thm21_thm22():
    """P_3-free implies {claw, P_6}-free: wherever Thm21 applies, so does Thm22."""
    from cyclekit.graph import complete

    t21, t22 = get("Thm21"), get("Thm22")
    corpus = seeded_gnp(7, 0.6, 120, seed=104) + seeded_gnp(8, 0.8, 60, seed=105)
    corpus += [complete(k) for k in range(4, 9)]  # the P_3-free 2-connected graphs
    seen_applicable = 0
    for g in corpus:
        pf = Profile(g)
        v21 = check(pf, t21)
        if v21.kind == "holds":
            seen_applicable += 1
            assert check(pf, t22).kind == "holds", g
    assert seen_applicable > 0  # the comparison must actually trigger


def test_forbidden_pair_entries_sound_on_2connected_corpus():
    """Theorem B audit: the {claw,S}-free entries never report VIOLATED on
    2-connected graphs of order >= 10."""
    specs = [get(tid) for tid in ("Thm21", "Thm22", "Thm23", "Thm24", "Thm25")]
    corpus = [
        g
        for g in seeded_gnp(10, 0.55, 120, seed=106) + seeded_gnp(11, 0.5, 80, seed=107)
        if Profile(g).kappa >= 2
    ]
    assert len(corpus) >= 50
    for g in corpus:
        pf = Profile(g)
        for spec in specs:
            assert check(pf, spec).kind != "VIOLATED", (g, spec.id)


def test_every_statement_mentions_its_bound():
    # light well-formedness: statements are nonempty and titles carry a source
    for spec in catalog():
        assert spec.statement and spec.title
