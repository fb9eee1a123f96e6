"""
Two-Colour Extractors for MONOCLE
Large monochromatic k-connected subgraphs of 2-coloured complete graphs:
the degree lemma and the n − 2k + 2 extractor built on top of it
"""

import logging
from math import isqrt
from typing import FrozenSet, Iterable, Literal, Tuple

import networkx as nx
import numpy as np

from .errors import PreconditionError, ensure
from .graph_core import (
    ColouredCompleteGraph,
    certify_intersect,
    closure_addvtx,
    is_k_connected,
    peel_low_degree,
)
from .reports import ExtractionReport, Trace, seal_extraction

Threshold = Literal["theorem", "remark"]

REMARK_MIN_K = 18


def _require_two_colours(F: ColouredCompleteGraph) -> None:
    if F.r != 2:
        raise PreconditionError(f"r = 2 (got r = {F.r})")


def split_by_degree_lemma(
    F: ColouredCompleteGraph, vertices: Iterable[int], primary: int, k: int, trace: Trace
) -> Tuple[int, FrozenSet[int]]:
    """
    On a vertex set where every primary degree is at least 2k − 2, return a
    colour and a vertex set of order >= |vertices| − k + 1 that is k-connected
    in that colour.

    Either the primary graph is already k-connected, or a separator S of size
    at most k − 1 splits it into I and J with |I|, |J| >= k; then the other
    colour contains the complete bipartite graph between I and J.
    """
    vertices = sorted(set(vertices))
    other = 3 - primary
    R = F.colour_graph(primary, vertices)
    connected, cut = is_k_connected(R, k)
    if connected:
        trace.add("degree-lemma", branch="primary", colour=primary, order=len(vertices))
        return primary, frozenset(vertices)

    ensure(cut is not None, "degree lemma: no separator returned", trace)
    rest = R.subgraph(set(vertices) - set(cut.separator))
    side = set(nx.node_connected_component(rest, cut.a))
    other_side = set(rest) - side
    ensure(
        len(side) >= k and len(other_side) >= k,
        f"degree lemma: sides {len(side)}, {len(other_side)} below k = {k}",
        trace,
    )
    trace.add(
        "degree-lemma", branch="bipartite", colour=other,
        separator=cut.separator, sides=[len(side), len(other_side)],
    )
    return other, frozenset(side | other_side)


def extract_degs(F: ColouredCompleteGraph, k: int, primary: int = 1) -> ExtractionReport:
    """Witness of order >= n − k + 1 when every vertex has primary degree >= 2k − 2"""
    _require_two_colours(F)
    degrees = F.colour_degrees(primary)
    low = np.flatnonzero(degrees < 2 * k - 2)
    if low.size:
        raise PreconditionError(f"colour-{primary} degree ⩾ 2k−2", vertex=int(low[0]))

    trace = Trace()
    colour, vertices = split_by_degree_lemma(F, range(F.n), primary, k, trace)
    return seal_extraction(
        F, "degs", {"k": k, "primary": primary}, vertices, colour, k, F.n - k + 1, trace
    )


def thm21k_threshold(k: int, threshold: Threshold = "theorem") -> Tuple[int, str]:
    """Smallest admissible n and the hypothesis label for the chosen threshold"""
    if threshold == "remark":
        if k >= REMARK_MIN_K:
            # least n with n >= (9 + sqrt 10) k, in integers
            root = isqrt(10 * k * k)
            if root * root < 10 * k * k:
                root += 1
            return 9 * k + root, "n ⩾ (9+√10)k"
        logging.warning(f"remark threshold needs k ⩾ {REMARK_MIN_K}, falling back to n ⩾ 13k−15 for k={k}")
    return 13 * k - 15, "n ⩾ 13k−15"


def extract_thm21k(F: ColouredCompleteGraph, k: int, threshold: Threshold = "theorem") -> ExtractionReport:
    """
    Witness of order >= n − 2k + 2 in a 2-colouring of K_n above the threshold.

    Vertices of low red degree and of low blue degree are peeled; the smaller
    peeled side is set aside, the degree lemma runs on the rest, and the set
    aside vertices are absorbed either directly or through a migration step
    that ends in a dense bipartite graph of the other colour.
    """
    _require_two_colours(F)
    n = F.n
    needed, label = thm21k_threshold(k, threshold)
    if n < needed:
        raise PreconditionError(label)
    mode = "remark" if label != "n ⩾ 13k−15" else "theorem"
    guarantee = n - 2 * k + 2
    params = {"k": k, "threshold": mode}

    trace = Trace().add("threshold", mode=mode, needed=needed, n=n)
    for primary in (1, 2):
        if F.colour_degrees(primary).min() >= 2 * k - 2:
            trace.add("min-degree", colour=primary)
            colour, vertices = split_by_degree_lemma(F, range(n), primary, k, trace)
            return seal_extraction(F, "thm21k", params, vertices, colour, k, guarantee, trace)

    X = peel_low_degree(F.colour_graph(1), 2 * k - 3)
    Y = peel_low_degree(F.colour_graph(2), 2 * k - 3)
    p, q = len(X), len(Y)
    trace.add("peel", X=X, Y=Y, p=p, q=q, overlap=len(set(X) & set(Y)))
    ensure(min(p, q) <= 8 * k - 11, f"peeled sides p={p}, q={q} both exceed 8k−11", trace)

    primary, peeled = (1, X) if p <= q else (2, Y)
    other = 3 - primary
    residual = sorted(set(range(n)) - set(peeled))
    trace.add("set-aside", colour=primary, size=len(peeled))
    colour, H = split_by_degree_lemma(F, residual, primary, k, trace)

    if colour == other:
        into_h = F.colour_degrees(other, within=H)
        short = [v for v in peeled if into_h[v] < k]
        ensure(not short, f"peeled vertices {short} send fewer than k colour-{other} edges into H", trace)
        trace.add("absorb", colour=other, added=len(peeled))
        return seal_extraction(F, "thm21k", params, H | set(peeled), other, k, guarantee, trace)

    grown = closure_addvtx(F, primary, residual, k, check=False)
    left_out = sorted(set(range(n)) - grown)
    trace.add("migrate", colour=primary, moved=len(grown) - len(residual), remaining=left_out)
    if len(left_out) <= 2 * k - 2:
        return seal_extraction(F, "thm21k", params, grown, primary, k, guarantee, trace)

    into_n = F.colour_degrees(other, within=left_out)
    U = [v for v in sorted(grown) if into_n[v] <= k - 1]
    ensure(len(U) <= 2 * k - 2, f"{len(U)} vertices with few colour-{other} edges exceed 2k−2", trace)
    M = sorted(grown - set(U))
    ensure(len(M) >= 3 * k - 2, f"|M| = {len(M)} below 3k−2", trace)
    B = F.colour_graph(other, set(M) | set(left_out))
    ensure(certify_intersect(B, M, left_out, k), "bipartite certificate failed after migration", trace)
    trace.add("bipartite", colour=other, U=U, M=len(M), N=len(left_out))
    return seal_extraction(F, "thm21k", params, set(M) | set(left_out), other, k, guarantee, trace)
