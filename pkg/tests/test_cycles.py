"""Cycle solvers: certificates, degenerate conventions, oracles."""

import networkx as nx
import pytest

from cyclekit.cycles import (
    CeilingError,
    CertificateError,
    CycleCert,
    all_longest_cycles,
    circumference,
    every_longest_cycle_satisfies,
    exists_cycle_satisfying,
    hamiltonian,
    hamiltonian_dp_oracle,
    is_CD_cycle,
    is_PD_cycle,
    is_dominating_cycle,
    longest_path,
    residual_params,
)
from cyclekit.families import build
from cyclekit.graph import (
    complete,
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    edgeless,
    path_graph,
    petersen,
)
from conftest import mixed_corpus, to_networkx


def naive_circumference(g) -> int:
    """All simple cycles via networkx, plus the degenerate conventions."""
    best = 1 if g.n else 0
    if g.q:
        best = 2
    for cyc in nx.simple_cycles(to_networkx(g)):
        if len(cyc) >= 3:
            best = max(best, len(cyc))
    return best


def test_degenerate_conventions():
    assert circumference(edgeless(1))[0] == 1  # a vertex is a cycle of length 1
    assert circumference(path_graph(2))[0] == 2  # an edge is a cycle of length 2
    assert hamiltonian(edgeless(1)) is not None
    assert hamiltonian(path_graph(2)) is not None
    assert hamiltonian(path_graph(3)) is None
    assert longest_path(edgeless(1))[0] == 0  # path length counts edges


def test_frozen_circumferences():
    assert circumference(petersen())[0] == 9  # [DERIVED]
    assert circumference(complete(6))[0] == 6
    assert circumference(complete_bipartite(3, 4))[0] == 6
    assert circumference(build("join2Kd-K1", delta=4))[0] == 5
    assert circumference(build("theta", i=3, j=3, k=3))[0] == 6


def test_certificates_validate():
    for g in mixed_corpus(seed=37, per_cell=4, ns=range(1, 9)):
        c, cert = circumference(g)
        cert.validate(g)
        assert cert.length == c
        length, pcert = longest_path(g)
        pcert.validate(g)
        assert pcert.edge_length == length


def test_certificate_rejection():
    g = path_graph(4)
    with pytest.raises(CertificateError):
        CycleCert((0, 1, 2, 3)).validate(g)  # 3-0 edge missing
    with pytest.raises(CertificateError):
        CycleCert((0, 0)).validate(g)
    with pytest.raises(CertificateError):
        CycleCert((0, 2)).validate(g)  # not an edge


def test_vs_naive_all_cycles():
    for g in mixed_corpus(seed=41, per_cell=5, ns=range(1, 9)):
        assert circumference(g)[0] == naive_circumference(g), g


def test_vs_dp_oracle():
    for g in mixed_corpus(seed=43, per_cell=6, ns=range(1, 11)):
        assert (hamiltonian(g) is not None) == hamiltonian_dp_oracle(g), g


def test_longest_path_vs_networkx_small():
    for g in mixed_corpus(seed=47, per_cell=3, ns=range(2, 8)):
        nxg = to_networkx(g)
        best = 0
        for u in nxg:
            for path in nx.all_simple_paths(nxg, u, set(nxg) - {u}):
                best = max(best, len(path) - 1)
        assert longest_path(g)[0] == best, g


def test_domination_predicates():
    g = build("join2Kd-K1", delta=3)  # 2K_3+K_1
    cyc = CycleCert((6, 0, 1, 2))  # hub + one triangle
    assert not is_dominating_cycle(g, cyc)  # the other K_3 has its own edges
    assert is_PD_cycle(g, cyc, 3)  # residual K_3 has longest path of 2 edges
    assert not is_PD_cycle(g, cyc, 2)
    assert is_CD_cycle(g, cyc, 4)  # residual K_3 cycle has 3 vertices
    assert not is_CD_cycle(g, cyc, 3)
    assert residual_params(g, cyc) == (2, 3)  # p counts edges, cbar vertices
    full = hamiltonian(complete(4))
    assert residual_params(complete(4), full) == (None, None)
    assert is_dominating_cycle(complete(4), full)


def test_all_longest_cycles_canonical():
    certs = list(all_longest_cycles(cycle_graph(5)))
    assert len(certs) == 1  # up to rotation and reflection
    assert certs[0].vertices[0] == 0
    certs6 = list(all_longest_cycles(complete(4)))
    assert len(certs6) == 3  # the three hamilton cycles of K_4
    assert len(set(certs6)) == 3


def test_enumeration_ceiling():
    g = disjoint_union([cycle_graph(8), cycle_graph(7)])  # n=15, non-spanning
    with pytest.raises(CeilingError):
        list(all_longest_cycles(g))
    with pytest.raises(CeilingError):
        every_longest_cycle_satisfies(g, "dominating")
    # spanning shortcut avoids enumeration even above the ceiling
    ok, _ = every_longest_cycle_satisfies(cycle_graph(20), "dominating")
    assert ok


def test_every_longest_and_exists():
    g = petersen()
    ok, counter = every_longest_cycle_satisfies(g, "dominating")
    assert ok and counter is None  # [DERIVED]
    g2 = build("join2Kd-K1", delta=3)
    ok2, counter2 = every_longest_cycle_satisfies(g2, "dominating")
    assert not ok2 and counter2 is not None
    cert = exists_cycle_satisfying(g2, "CD", 4)
    assert cert is not None and is_CD_cycle(g2, cert, 4)
    # P_3's middle edge is a degenerate dominating 2-cycle; P_5 has none
    assert exists_cycle_satisfying(path_graph(3), "dominating") is not None
    assert exists_cycle_satisfying(path_graph(5), "dominating") is None
