"""
Three-Colour Extractors for MONOCLE
The bipartite 3-colour lemma and the (n − k + 1)/2 extractor for
3-coloured complete graphs on at least 480k vertices
"""

import logging
from fractions import Fraction
from math import floor
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

import numpy as np

from .errors import InvariantBreach, PreconditionError, ensure
from .extract_general import extract_mader
from .graph_core import (
    ColouredBipartiteGraph,
    ColouredCompleteGraph,
    SimpleGraph,
    certify_intersect,
    closure_addvtx,
)
from .reports import ExtractionReport, Trace, seal_extraction


def extract_31kbip(
    FB: ColouredBipartiteGraph, k: int, roles: Tuple[int, int, int] = (1, 2, 3), trace: Optional[Trace] = None
) -> ExtractionReport:
    """
    Witness of order >= p + q − 24k in a 3-coloured K_{p,q} (left part P).

    roles = (main, q_limited, p_limited): every P-vertex sends at most k
    edges of colour p_limited and every Q-vertex at most k edges of colour
    q_limited. P- and Q-vertices with few main-colour edges are dropped and
    what is left is k-connected in the main colour.
    """
    main, q_limited, p_limited = roles
    P, Q = FB.left, FB.right
    p, q = len(P), len(Q)
    if not (3 * p >= q >= p >= 24 * k):
        raise PreconditionError("3p ⩾ q ⩾ p ⩾ 24k")
    over_p = np.flatnonzero((FB.matrix == p_limited).sum(axis=1) > k)
    if over_p.size:
        raise PreconditionError(f"each P-vertex has ⩽ k colour-{p_limited} edges", vertex=P[over_p[0]])
    over_q = np.flatnonzero((FB.matrix == q_limited).sum(axis=0) > k)
    if over_q.size:
        raise PreconditionError(f"each Q-vertex has ⩽ k colour-{q_limited} edges", vertex=Q[over_q[0]])

    trace = trace if trace is not None else Trace()
    main_edges = FB.matrix == main
    S_P = [P[i] for i in np.flatnonzero(4 * main_edges.sum(axis=1) <= 3 * q)]
    S_Q = [Q[j] for j in np.flatnonzero(4 * main_edges.sum(axis=0) <= 3 * p)]
    trace.add("sparse-vertices", colour=main, S_P=S_P, S_Q=S_Q, limits={"S_P": 8 * k, "S_Q": 16 * k})
    ensure(len(S_P) <= 8 * k and len(S_Q) <= 16 * k, f"|S_P| = {len(S_P)}, |S_Q| = {len(S_Q)} too large", trace)

    P_kept = sorted(set(P) - set(S_P))
    Q_kept = sorted(set(Q) - set(S_Q))
    G = FB.colour_graph(main, P_kept + Q_kept)
    ensure(certify_intersect(G, P_kept, Q_kept, k), "dense bipartite certificate failed", trace)
    return seal_extraction(
        FB, "31kbip", {"k": k, "roles": list(roles)}, P_kept + Q_kept, main, k, p + q - 24 * k, trace
    )


def thm31k_guarantee(n: int, k: int, refine: bool = True) -> int:
    """Exact order guaranteed for 3 colours, by n + k mod 4"""
    if not refine:
        return (n - k + 2) // 2
    return {0: (n - k + 2) // 2, 1: (n - k + 1) // 2, 2: (n - k + 2) // 2, 3: (n - k + 3) // 2}[(n + k) % 4]


def _others(i: int) -> Tuple[int, int]:
    return tuple(c for c in (1, 2, 3) if c != i)


class _Found(Exception):
    def __init__(self, colour: int, vertices: FrozenSet[int], step: str):
        self.colour = colour
        self.vertices = vertices
        self.step = step
        super().__init__(step)


class _ThreeColourSearch:
    """State of one extraction; any set above the threshold ends the search via _Found"""

    def __init__(self, F: ColouredCompleteGraph, k: int, refine: bool):
        self.F = F
        self.k = k
        self.n = F.n
        self.refined = refine and (F.n + k) % 4 == 3
        # a set beats the threshold iff 2|S| > limit
        self.limit = F.n - k + 1 if self.refined else F.n - k
        self.trace = Trace().add("threshold", limit=Fraction(self.limit, 2), refined=self.refined)
        self.everything = frozenset(range(F.n))

    def offer(self, colour: int, vertices: Iterable[int], step: str) -> FrozenSet[int]:
        vertices = frozenset(vertices)
        if 2 * len(vertices) > self.limit:
            self.trace.add("found", step=step, colour=colour, order=len(vertices))
            raise _Found(colour, vertices, step)
        return vertices

    def close(self, colour: int, vertices: Iterable[int], step: str, check: bool = False) -> FrozenSet[int]:
        grown = closure_addvtx(self.F, colour, vertices, self.k, check=check)
        self.trace.add("closure", step=step, colour=colour, seed=len(set(vertices)), order=len(grown))
        return self.offer(colour, grown, step)

    def seeded(self, colour: int, G: SimpleGraph, step: str, accept) -> FrozenSet[int]:
        """Mader seed at level k, then at full strength, closed in the given colour"""
        avg = Fraction(2 * G.number_of_edges(), max(G.number_of_nodes(), 1))
        levels = list(dict.fromkeys([self.k, max(self.k, floor(avg / 4))]))
        for level in levels:
            seed = extract_mader(G, level, self.trace)
            closed = self.close(colour, seed.nodes, step)
            if accept(closed):
                return closed
            logging.info(f"thm31k: {step} seed at level {level} too small, retrying at full strength")
        ensure(False, f"{step}: no seed met the size requirement", self.trace)

    def lemma(self, main: int, A_p: int, A_q: int, P: Iterable[int], Q: Iterable[int]) -> ExtractionReport:
        """Run the bipartite lemma with P ⊆ A_p ∖ A_q and Q ⊆ A_q ∖ A_p"""
        try:
            return extract_31kbip(self.F.bipartite_view(P, Q), self.k, roles=(main, A_p, A_q), trace=self.trace)
        except PreconditionError as err:
            raise InvariantBreach(f"bipartite lemma hypothesis failed: {err}", [s.model_dump() for s in self.trace])

    def cover(self) -> Dict[int, FrozenSet[int]]:
        """Three closed sets, one per colour, covering every vertex"""
        F, k, n = self.F, self.k, self.n
        counts = F.edge_counts()
        c1 = sorted((1, 2, 3), key=lambda c: (-counts[c], c))[0]
        A: Dict[int, FrozenSet[int]] = {}
        A[c1] = self.seeded(c1, F.colour_graph(c1), "A1", lambda S: 12 * len(S) >= n)

        outside = sorted(self.everything - A[c1])
        view = F.bipartite_view(sorted(A[c1]), outside)
        cross = view.edge_counts()
        c2, c3 = sorted((c for c in (1, 2, 3) if c != c1), key=lambda c: (-cross[c], c))
        self.trace.add("cross-density", colours=[c2, c3], edges=[int(cross[c2]), int(cross[c3])])

        A[c2] = self.seeded(c2, view.colour_graph(c2), "A2", lambda S: len(S & A[c1]) >= 8 * k)
        X = sorted(A[c1] & A[c2])
        Y = sorted(self.everything - A[c1] - A[c2])
        into_y = F.colour_degrees(c3, within=Y) if Y else np.zeros(n, dtype=int)
        U = [v for v in X if into_y[v] <= k - 1]
        X_kept = sorted(set(X) - set(U))
        self.trace.add("overlap", X=len(X), Y=len(Y), U=U)
        ensure(
            certify_intersect(F.colour_graph(c3, X_kept + Y), X_kept, Y, k),
            f"colour-{c3} bipartite certificate between overlap and uncovered set failed",
            self.trace,
        )
        A[c3] = self.close(c3, X_kept + Y, "A3")
        ensure(A[c1] | A[c2] | A[c3] == self.everything, "the three closed sets do not cover V", self.trace)
        return A

    def run(self) -> None:
        k, n = self.k, self.n
        A = self.cover()
        common = A[1] & A[2] & A[3]
        sizes = {}
        for i in (1, 2, 3):
            j, l = _others(i)
            sizes[i] = {"a": len(A[i] - A[j] - A[l]), "b": len((A[j] & A[l]) - A[i])}
        self.trace.add("regions", sizes=sizes, c=len(common))

        for i in (1, 2, 3):
            if 6 * sizes[i]["a"] < n:
                j, l = _others(i)
                if len(A[j] - A[l]) > len(A[l] - A[j]):
                    j, l = l, j
                self.trace.add("small-private-region", colour=i, P_from=j, Q_from=l)
                report = self.lemma(i, j, l, A[j] - A[l], A[l] - A[j])
                self.close(i, report.witness.vertices, "small-private-region")
                ensure(False, "bipartite piece for a small private region stayed below the threshold", self.trace)

        M: Dict[int, FrozenSet[int]] = {}
        for i, j in ((1, 2), (1, 3), (2, 3)):
            l = 6 - i - j
            a, b = (i, j) if len(A[i] - A[j]) <= len(A[j] - A[i]) else (j, i)
            report = self.lemma(l, a, b, A[a] - A[b], A[b] - A[a])
            M[l] = self.close(l, report.witness.vertices, f"pair-{i}{j}")

        x = {}
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i != j:
                    l = 6 - i - j
                    x[(i, j)] = len(A[i] - A[j] - M[l])
                    ensure(x[(i, j)] <= 16 * k, f"x_{i}{j} = {x[(i, j)]} exceeds 16k", self.trace)
        z = {i: len(M[i] - A[_others(i)[0]] - A[_others(i)[1]]) for i in (1, 2, 3)}
        self.trace.add("leftovers", x={f"{i}{j}": v for (i, j), v in x.items()}, z=z)

        for i in (1, 2, 3):
            j, l = _others(i)
            if x[(i, j)] + x[(i, l)] - z[i] >= k:
                ensure(len(A[i] & M[i]) >= k, f"A_{i} and M_{i} share fewer than k vertices", self.trace)
                self.close(i, A[i] | M[i], "union", check=True)
                ensure(False, f"union in colour {i} stayed below the threshold", self.trace)
        ensure(False, "no colour has enough private leftovers", self.trace)


def extract_thm31k(F: ColouredCompleteGraph, k: int, refine: bool = True) -> ExtractionReport:
    """
    Witness above (n − k)/2 in a 3-colouring of K_n with n >= 480k.

    With refine on and n + k ≡ 3 (mod 4) the witness is above (n − k + 1)/2,
    which gives the exact order per residue of n + k mod 4.
    """
    if F.r != 3:
        raise PreconditionError(f"r = 3 (got r = {F.r})")
    if F.n < 480 * k:
        raise PreconditionError("n ⩾ 480k")
    search = _ThreeColourSearch(F, k, refine)
    try:
        search.run()
    except _Found as found:
        return seal_extraction(
            F, "thm31k", {"k": k, "refine": refine}, found.vertices, found.colour, k,
            thm31k_guarantee(F.n, k, refine), search.trace,
        )
    ensure(False, "three-colour search ended without a witness", search.trace)
