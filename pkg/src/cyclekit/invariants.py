"""Exact numeric invariants: degrees, connectivity, independence number,
toughness, binding number, degree-sum and distance-degree minima.

Everything is computed exactly.  The NP-hard invariants (alpha, toughness,
binding number) use exhaustive search with pruning; connectivity goes
through unit-capacity vertex max-flow and is cross-checked against the
exhaustive cut scan in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exact import Exact, INF, fmt_exact
from .graph import Graph, all_distances, bits


def degree_profile(g: Graph) -> tuple[int, int, int, int, list[int]]:
    """(n, q, min degree, max degree, sorted degree sequence)."""
    degs = sorted(g.degrees())
    if not degs:
        return (0, 0, 0, 0, [])
    return (g.n, g.q, degs[0], degs[-1], degs)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


# -- degree sums over independent sets ------------------------------------


def sigma_t(g: Graph, t: int) -> Exact:
    """Minimum degree sum over independent t-sets; +inf when alpha < t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    degs = g.degrees()
    rows = g.rows
    best: list[Exact] = [INF]

    def extend(start: int, allowed: int, size: int, acc: int) -> None:
        if size == t:
            if acc < best[0]:
                best[0] = acc
            return
        m = allowed >> start << start
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            extend(v + 1, allowed & ~rows[v], size + 1, acc + degs[v])

    extend(0, g.full_mask, 0, 0)
    return best[0] if best[0] == INF else Fraction(best[0])


def delta_t(g: Graph, t: int) -> Exact:
    """Minimum over vertex pairs at distance exactly t of max{d(u),d(v)}."""
    if t < 1:
        raise ValueError("t must be >= 1")
    degs = g.degrees()
    best: Exact = INF
    for u in range(g.n):
        dist = all_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] == t:
                m = max(degs[u], degs[v])
                if m < best:
                    best = m
    return best if best == INF else Fraction(best)


# -- connectivity ---------------------------------------------------------


def _vertex_max_flow(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s,t nonadjacent)."""
    # Vertex-split network: node 2v = v_in, 2v+1 = v_out, all unit capacities.
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap[(a, b)] = 0
            cap[(b, a)] = 0
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, n if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, n)
        add(2 * v + 1, 2 * u, n)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for a in queue:
                for b in adj[a]:
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Vertex connectivity; kappa(K_n) = n-1 by convention, 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if g.q == n * (n - 1) // 2:
        return n - 1
    if not g.is_connected():
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.rows[s] >> t & 1:
                best = min(best, _vertex_max_flow(g, s, t))
    return best


def cut_scan(g: Graph) -> tuple[int, Exact, int]:
    """Exhaustive scan over cutsets: (kappa, toughness, toughness witness mask).

    One pass over all vertex subsets S with s(G-S) > 1 yields both the
    minimum cut size and the toughness minimum |S|/s(G-S).
    """
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    if n <= 1:
        return (0, INF, 0)
    kappa = n - 1
    tau: Exact = INF
    tau_witness = 0
    for rem in range(full, -1, -1):
        # rem = kept vertex set; S = full ^ rem
        low = rem & -rem
        if not low:
            continue
        # reach from lowest kept vertex
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= rows[v]
            frontier = nxt & rem & ~comp
            comp |= frontier
        if comp == rem:
            continue
        # disconnected remainder: count all components
        comps = 1
        rest = rem & ~comp
        while rest:
            seed = rest & -rest
            c2 = seed
            frontier = seed
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= rows[v]
                frontier = nxt & rest & ~c2
                c2 |= frontier
            rest &= ~c2
            comps += 1
        s_size = n - rem.bit_count()
        if s_size < kappa:
            kappa = s_size
        ratio = Fraction(s_size, comps)
        if ratio < tau:
            tau = ratio
            tau_witness = full ^ rem
    if tau == INF:
        # no disconnecting set: complete graph (or n == 1)
        return (n - 1, INF, 0)
    return (kappa, tau, tau_witness)


def toughness(g: Graph) -> tuple[Exact, list[int]]:
    """Exact toughness with a witness cutset (empty for complete graphs)."""
    _, tau, witness = cut_scan(g)
    return tau, bits(witness)


# -- independence ---------------------------------------------------------


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """Maximum independent set size with a witness, by branch and bound."""
    rows = g.rows
    best_size = 0
    best_mask = 0

    def bnb(allowed: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + allowed.bit_count() <= best_size:
            return
        if not allowed:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        # branch on a maximum-degree candidate: either exclude it or take it
        v = max(bits(allowed), key=lambda u: (rows[u] & allowed).bit_count())
        bnb(allowed & ~(1 << v), chosen, size)
        bnb(allowed & ~rows[v] & ~(1 << v), chosen | (1 << v), size + 1)

    bnb(g.full_mask, 0, 0)
    return best_size, bits(best_mask)


# -- binding number -------------------------------------------------------


def binding_number(g: Graph) -> tuple[Exact, list[int]]:
    """Woodall's binding number: min |N(X)|/|X| over nonempty X with N(X) != V.

    Subtrees where N(X) already covers V are pruned (supersets only grow
    the neighborhood).  Returns +inf when no X qualifies (K_1, K_0).
    """
    if g.n == 0:
        raise ValueError("binding number needs n >= 1")
    rows = g.rows
    full = g.full_mask
    best: list[Exact] = [INF]
    witness = [0]

    def extend(start: int, chosen: int, size: int, nbhd: int) -> None:
        if size:
            ratio = Fraction(nbhd.bit_count(), size)
            if ratio < best[0]:
                best[0] = ratio
                witness[0] = chosen
        for v in range(start, g.n):
            nb = nbhd | rows[v]
            if nb == full:
                continue
            extend(v + 1, chosen | (1 << v), size + 1, nb)

    extend(0, 0, 0, 0)
    return best[0], bits(witness[0])


# -- aggregate report -----------------------------------------------------


@dataclass
class InvariantReport:
    n: int
    q: int
    delta: int
    Delta: int
    degree_sequence: list[int]
    kappa: int
    alpha: int
    tau: Exact
    binding: Exact
    sigma: dict[int, Exact] = field(default_factory=dict)
    delta_dist: dict[int, Exact] = field(default_factory=dict)
    flags: dict[str, bool | None] = field(default_factory=dict)

    def to_lines(self) -> list[str]:
        lines = [
            f"n {self.n}",
            f"q {self.q}",
            f"delta {self.delta}",
            f"Delta {self.Delta}",
            f"degrees {' '.join(map(str, self.degree_sequence))}",
            f"kappa {self.kappa}",
            f"alpha {self.alpha}",
            f"tau {fmt_exact(self.tau)}",
            f"binding {fmt_exact(self.binding)}",
        ]
        for t in sorted(self.sigma):
            lines.append(f"sigma_{t} {fmt_exact(self.sigma[t])}")
        for t in sorted(self.delta_dist):
            lines.append(f"delta_{t} {fmt_exact(self.delta_dist[t])}")
        for name in sorted(self.flags):
            val = self.flags[name]
            lines.append(f"{name} {'undecided' if val is None else str(val).lower()}")
        return lines

    def to_record(self) -> dict:
        rec = {
            "n": self.n,
            "q": self.q,
            "delta": self.delta,
            "Delta": self.Delta,
            "degrees": self.degree_sequence,
            "kappa": self.kappa,
            "alpha": self.alpha,
            "tau": fmt_exact(self.tau),
            "binding": fmt_exact(self.binding),
        }
        rec.update({f"sigma_{t}": fmt_exact(v) for t, v in self.sigma.items()})
        rec.update({f"delta_{t}": fmt_exact(v) for t, v in self.delta_dist.items()})
        rec.update(self.flags)
        return rec


def invariant_report(g: Graph, ts: tuple[int, ...] = (2, 3)) -> InvariantReport:
    """Full invariant bundle for one graph, class flags included."""
    from .structure import class_predicates

    n, q, dmin, dmax, degs = degree_profile(g)
    kappa, tau, _ = cut_scan(g)
    alpha, _ = independence_number(g)
    binding = binding_number(g)[0] if n >= 1 else INF
    return InvariantReport(
        n=n,
        q=q,
        delta=dmin,
        Delta=dmax,
        degree_sequence=degs,
        kappa=kappa,
        alpha=alpha,
        tau=tau,
        binding=binding,
        sigma={t: sigma_t(g, t) for t in ts},
        delta_dist={t: delta_t(g, t) for t in ts},
        flags=class_predicates(g),
    )
