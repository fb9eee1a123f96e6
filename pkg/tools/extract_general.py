"""
General Extractors for MONOCLE
Mader's dense-to-connected extraction, bipartite component and bipartite
k-connected extraction, and the r-colour extractors built from them
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import FrozenSet, Iterable, Optional, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from .errors import DomainError, ParameterError, PreconditionError, ensure
from .graph_core import (
    ColouredBipartiteGraph,
    ColouredCompleteGraph,
    SimpleGraph,
    certify_intersect,
    closure_addvtx,
    is_k_connected,
    sorted_components,
)
from .reports import ExtractionReport, Trace, seal_extraction


def _edges_enough(H: SimpleGraph, k: int) -> bool:
    return H.number_of_edges() >= (2 * k - 3) * (H.number_of_nodes() - k + 1) + 1


def extract_mader(G: SimpleGraph, k: int, trace: Optional[Trace] = None) -> SimpleGraph:
    """
    A k-connected induced subgraph of a graph with average degree >= 4k.

    Low-degree vertices are peeled while more than 2k − 1 remain; a graph
    left with exactly 2k − 1 vertices is complete. Otherwise a separator of
    size < k splits the graph and the search continues in a side that still
    has at least (2k − 3)(|H| − k + 1) + 1 edges.
    """
    if k < 1:
        raise DomainError(f"connectivity level must be at least 1, got {k}")
    n, e = G.number_of_nodes(), G.number_of_edges()
    if n == 0 or 2 * e < 4 * k * n:
        raise PreconditionError("average degree ⩾ 4k")
    trace = trace if trace is not None else Trace()

    if k == 1:
        best = max(sorted_components(G), key=lambda c: G.subgraph(c).number_of_edges())
        trace.add("mader", level=1, order=len(best))
        return G.subgraph(best).copy()

    H = G.copy()
    floor_order = 2 * k - 1
    while True:
        ensure(
            _edges_enough(H, k) and H.number_of_nodes() >= floor_order,
            f"mader: {H.number_of_edges()} edges on {H.number_of_nodes()} vertices below the bound",
            trace,
        )
        while H.number_of_nodes() > floor_order:
            low = [v for v, d in H.degree() if d <= 2 * k - 3]
            if not low:
                break
            H.remove_node(min(low))

        if H.number_of_nodes() == floor_order:
            ensure(H.number_of_edges() == floor_order * (floor_order - 1) // 2, "mader: floor graph not complete", trace)
            trace.add("mader", level=k, order=floor_order, branch="complete")
            return H

        connected, cut = is_k_connected(H, k)
        if connected:
            trace.add("mader", level=k, order=H.number_of_nodes(), branch="connected")
            return H

        separator = set(cut.separator)
        rest = H.subgraph(set(H) - separator)
        first = set(nx.node_connected_component(rest, cut.a))
        sides = [H.subgraph(first | separator).copy(), H.subgraph(set(rest) - first | separator).copy()]
        kept = [S for S in sides if S.number_of_nodes() >= floor_order and _edges_enough(S, k)]
        ensure(kept, "mader: neither side of the separator keeps enough edges", trace)
        H = max(kept, key=lambda S: S.number_of_edges())
        trace.add(
            "mader-split", separator=sorted(separator),
            orders=[S.number_of_nodes() for S in sides], kept=H.number_of_nodes(),
        )


def _cross_graph(B: SimpleGraph, M: Iterable[int], N: Iterable[int]) -> SimpleGraph:
    """Edges of B between M and N, on the vertex set M ∪ N"""
    M, N = set(M), set(N)
    if M & N:
        raise ParameterError("bipartite parts must be disjoint")
    H = nx.Graph()
    H.add_nodes_from(sorted(M | N))
    H.add_edges_from((x, y) for x in sorted(M) if x in B for y in B[x] if y in N)
    return H


def extract_bip_component(B: SimpleGraph, M: Iterable[int], N: Iterable[int]) -> SimpleGraph:
    """
    Component of order >= e(m + n)/(mn) in a bipartite graph with parts M, N.

    It is the component of the edge xy maximising d(x) + d(y); ties go to
    the lexicographically smallest (x, y) with x in M.
    """
    M, N = sorted(set(M)), sorted(set(N))
    H = _cross_graph(B, M, N)
    e = H.number_of_edges()
    if e == 0:
        raise DomainError("bipartite graph has no edges")
    edges = [(x, y) for x in M for y in sorted(H[x])]
    x, y = max(edges, key=lambda xy: (H.degree(xy[0]) + H.degree(xy[1]), -xy[0], -xy[1]))
    component = H.subgraph(nx.node_connected_component(H, x)).copy()
    ensure(
        component.number_of_nodes() * len(M) * len(N) >= e * (len(M) + len(N)),
        f"component of order {component.number_of_nodes()} below e(m+n)/(mn)",
    )
    return component


def _largest_monochromatic_component(F: ColouredCompleteGraph) -> Tuple[int, FrozenSet[int]]:
    """Largest component over all colours; ties go to the smaller colour, then smallest vertex"""
    best: Optional[Tuple[int, FrozenSet[int]]] = None
    for colour in range(1, F.r + 1):
        for component in sorted_components(F.colour_graph(colour)):
            if best is None or len(component) > len(best[1]):
                best = (colour, component)
    return best


def extract_r11(F: ColouredCompleteGraph, r: Optional[int] = None) -> ExtractionReport:
    """Monochromatic component of order >= n/(r − 1) (n when r = 1)"""
    r = F.r if r is None else r
    if r < F.r:
        raise ParameterError(f"colouring uses {F.r} colours, more than r = {r}")
    n = F.n
    guarantee = n if r <= 1 else ceil(Fraction(n, r - 1))
    trace = Trace()
    colour, C = _largest_monochromatic_component(F)
    trace.add("largest-component", colour=colour, order=len(C))
    if len(C) < n:
        D = sorted(set(range(n)) - C)
        view = F.bipartite_view(sorted(C), D)
        counts = view.edge_counts()
        counts[colour] = 0
        i = int(np.argmax(counts[1:])) + 1
        component = extract_bip_component(view.colour_graph(i), view.left, view.right)
        extended = frozenset(nx.node_connected_component(F.colour_graph(i), min(component)))
        trace.add(
            "bipartite-density", colour=i, edges=int(counts[i]),
            component=component.number_of_nodes(), extended=len(extended),
        )
        if len(extended) > len(C):
            colour, C = i, extended
    return seal_extraction(F, "r11", {"r": r}, C, colour, 1, guarantee, trace)


def turan_bound(m: int, n: int, ell: int, q: int) -> Fraction:
    """Edge count a bipartite graph must exceed for the (ℓ+1)-connected extraction"""
    span = m + n - 2 * ell
    if span < 1:
        raise ParameterError(f"need m + n − 2ℓ ⩾ 1, got m={m}, n={n}, ℓ={ell}")
    return Fraction(q * (n - ell) * (m - ell), span) + (ell * ell + ell) * span


def split_gap(a: int, b: int, c: int, d: int) -> Fraction:
    """(a+c)(b+d)/(a+b+c+d) − ab/(a+b) − cd/(c+d); never negative"""
    if a + b <= 0 or c + d <= 0:
        raise DomainError("both halves need a positive total")
    return (
        Fraction((a + c) * (b + d), a + b + c + d)
        - Fraction(a * b, a + b)
        - Fraction(c * d, c + d)
    )


@dataclass(frozen=True)
class BipartiteExtraction:
    subgraph: Optional[SimpleGraph]
    bound: Fraction
    edges: int
    depth: int = 0
    trace: Trace = field(default_factory=Trace)

    @property
    def refused(self) -> bool:
        return self.subgraph is None


def _separated_cross_pair(H: SimpleGraph, M: Set[int], N: Set[int], separator: Sequence[int]) -> Tuple[int, int]:
    parts = sorted_components(H.subgraph(set(H) - set(separator)))
    for i, first in enumerate(parts):
        for second in parts[i + 1:]:
            for a, b in ((first, second), (second, first)):
                xs, ys = sorted(a & M), sorted(b & N)
                if xs and ys:
                    return xs[0], ys[0]
    ensure(False, "separator does not split M from N")


def extract_r1kbip(
    B: SimpleGraph, M: Iterable[int], N: Iterable[int], ell: int, q: int
) -> BipartiteExtraction:
    """
    An (ℓ+1)-connected subgraph on at least q vertices of a bipartite graph
    with more than q(n−ℓ)(m−ℓ)/(m+n−2ℓ) + (ℓ²+ℓ)(m+n−2ℓ) edges.

    Refuses (subgraph None) at or below the bound. Otherwise splits along
    separators padded to ℓ vertices per side and follows a half that still
    exceeds its own bound.
    """
    M, N = set(M), set(N)
    m, n = len(M), len(N)
    if ell < 0 or q < 1 or m < ell or n < ell or m + n < 2 * ell + 1:
        raise ParameterError(f"invalid bipartite parameters m={m}, n={n}, ℓ={ell}, q={q}")
    H = _cross_graph(B, M, N)
    e = H.number_of_edges()
    bound = turan_bound(m, n, ell, q)
    trace = Trace().add("edge-bound", edges=e, bound=bound)
    if e <= bound:
        trace.add("refuse")
        return BipartiteExtraction(None, bound, e, 0, trace)

    level = ell + 1
    depth = 0
    while True:
        HM, HN = M & set(H), N & set(H)
        ensure(H.number_of_edges() > turan_bound(len(HM), len(HN), ell, q), "edge bound lost", trace)
        ensure(len(HM) > ell and len(HN) > ell, f"side below ℓ+1 at depth {depth}", trace)
        if certify_intersect(H, HM, HN, level) or certify_intersect(H, HN, HM, level):
            connected, cut = True, None
        else:
            connected, cut = is_k_connected(H, level)
        if connected:
            ensure(H.number_of_nodes() >= q, f"connected piece of order {H.number_of_nodes()} below q = {q}", trace)
            trace.add("connected", order=H.number_of_nodes(), depth=depth)
            return BipartiteExtraction(H, bound, e, depth, trace)

        x, y = _separated_cross_pair(H, HM, HN, cut.separator)
        padded = set(cut.separator)
        for side in (HM, HN):
            missing = max(ell - len(padded & side), 0)
            padded |= set(sorted(side - padded - {x, y})[:missing])
        rest = H.subgraph(set(H) - padded)
        first = set(nx.node_connected_component(rest, x))
        ensure(y not in first, "padding reconnected the separated pair", trace)

        halves = []
        for part in (first, set(rest) - first):
            child = H.subgraph(part | padded).copy()
            cm, cn = len(M & set(child)), len(N & set(child))
            halves.append((child, cm, cn, child.number_of_edges() > turan_bound(cm, cn, ell, q)))
        (_, m1, n1, _), (_, m2, n2, _) = halves
        gap = split_gap(m1 - ell, n1 - ell, m2 - ell, n2 - ell)
        ensure(gap >= 0, "split arithmetic inequality failed", trace)
        heavy = [h for h in halves if h[3]]
        ensure(heavy, "neither half exceeds its edge bound", trace)
        child = max(heavy, key=lambda h: h[0].number_of_edges())[0]
        ensure(child.number_of_nodes() < H.number_of_nodes(), "recursion did not shrink", trace)
        depth += 1
        ensure(depth <= m + n, "recursion depth exceeded m + n", trace)
        trace.add(
            "split", depth=depth, separator=sorted(cut.separator), padded=sorted(padded),
            orders=[halves[0][0].number_of_nodes(), halves[1][0].number_of_nodes()],
            kept=child.number_of_nodes(), gap=gap,
        )
        H = child


def sharpest_q(c: int, d: int, ell: int, e: int) -> int:
    """Largest q for which e exceeds the bipartite edge bound on parts of size c, d"""
    span = c + d - 2 * ell
    area = (c - ell) * (d - ell)
    if area <= 0 or span < 1:
        return 0
    value = Fraction((e - (ell * ell + ell) * span) * span, area)
    return max(ceil(value) - 1, 0)


def r1k_guarantee(n: int, r: int, k: int) -> Tuple[int, str]:
    base = Fraction(n, r - 1)
    value, source = ceil(base - 11 * (k * k - k) * r), "n/(r−1) − 11(k²−k)r"
    if n >= 44 * k * k * r * r:
        sharper = ceil(base - 2 * k * k * r)
        if sharper > value:
            value, source = sharper, "n/(r−1) − 2k²r"
    return max(value, 0), source


def _grow_by_bipartite(
    F: ColouredCompleteGraph, r: int, k: int, colour: int, C: FrozenSet[int], trace: Trace
) -> Tuple[int, FrozenSet[int]]:
    n = F.n
    ell = k - 1
    while len(C) * (r - 1) < n:
        D = sorted(set(range(n)) - C)
        c, d = len(C), len(D)
        if c <= ell or d <= ell:
            break
        view = F.bipartite_view(sorted(C), D)
        counts = view.edge_counts()
        counts[colour] = 0
        i = int(np.argmax(counts[1:])) + 1
        e = int(counts[i])
        q = sharpest_q(c, d, ell, e)
        q_proof = floor(Fraction(n - 2 * ell, r - 1) - 10 * r * (k * k - k))
        trace.add("bipartite-step", C=c, D=d, colour=i, edges=e, q=q, q_proof=q_proof)
        if q < 1:
            break
        outcome = extract_r1kbip(view.colour_graph(i), view.left, view.right, ell, q)
        if outcome.refused:
            break
        grown = closure_addvtx(F, i, outcome.subgraph.nodes, k, check=False)
        trace.add("bipartite-piece", colour=i, order=outcome.subgraph.number_of_nodes(), closed=len(grown))
        if len(grown) <= len(C):
            break
        colour, C = i, grown
    return colour, C


def extract_thm_r1k(F: ColouredCompleteGraph, k: int, r: Optional[int] = None) -> ExtractionReport:
    """
    Witness of order >= n/(r − 1) − 11(k² − k)r for r >= 3 colours.

    A k-connected seed in the majority colour is closed under adding
    vertices with k neighbours inside; while the closed set is short of
    n/(r − 1), the densest colour across it is searched for a large
    k-connected bipartite piece whose closure replaces it.
    """
    r = F.r if r is None else r
    if r < F.r:
        raise ParameterError(f"colouring uses {F.r} colours, more than r = {r}")
    if r < 3:
        raise PreconditionError("r ⩾ 3")
    if k == 1:
        report = extract_r11(F, r)
        return report.model_copy(update={"method": "thm_r1k", "parameters": {"k": 1, "r": r}})
    n = F.n
    if not (n > 11 * (k * k - k) * (r * r - r) and n > 4 * k * r):
        raise PreconditionError("n > 11(k²−k)(r²−r) and n > 4kr")

    guarantee, source = r1k_guarantee(n, r, k)
    trace = Trace().add("guarantee", value=guarantee, source=source)
    counts = F.edge_counts()
    majority = int(np.argmax(counts[1:])) + 1
    G = F.colour_graph(majority)
    levels = list(dict.fromkeys([k, max(k, floor(Fraction(2 * int(counts[majority]), n) / 4))]))

    best: Optional[Tuple[int, FrozenSet[int]]] = None
    for level in levels:
        seed = extract_mader(G, level, trace)
        closed = closure_addvtx(F, majority, seed.nodes, k, check=False)
        trace.add("seed", colour=majority, level=level, order=seed.number_of_nodes(), closed=len(closed))
        colour, grown = _grow_by_bipartite(F, r, k, majority, closed, trace)
        if best is None or len(grown) > len(best[1]):
            best = (colour, grown)
        if len(best[1]) >= guarantee:
            break
        logging.info(f"thm_r1k: seed level {level} reached {len(best[1])} of {guarantee}, retrying at full strength")
    colour, vertices = best
    return seal_extraction(F, "thm_r1k", {"k": k, "r": r}, vertices, colour, k, guarantee, trace)


def extract_mader_coloured(F: ColouredCompleteGraph, k: int, colour: int = 1) -> ExtractionReport:
    """Mader extraction on one colour class, reported as a witness"""
    trace = Trace()
    H = extract_mader(F.colour_graph(colour), k, trace)
    guarantee = 2 if k == 1 else 2 * k - 1
    return seal_extraction(F, "mader", {"k": k, "colour": colour}, H.nodes, colour, k, guarantee, trace)


def extract_r1kbip_coloured(FB: ColouredBipartiteGraph, ell: int, q: int, colour: int = 1) -> ExtractionReport:
    """Bipartite (ℓ+1)-connected extraction on one colour class; refusal is a failed hypothesis"""
    outcome = extract_r1kbip(FB.colour_graph(colour), FB.left, FB.right, ell, q)
    if outcome.refused:
        raise PreconditionError(f"e(G) = {outcome.edges} > {outcome.bound}")
    return seal_extraction(
        FB, "r1kbip", {"ell": ell, "q": q, "colour": colour},
        outcome.subgraph.nodes, colour, ell + 1, q, outcome.trace,
    )
