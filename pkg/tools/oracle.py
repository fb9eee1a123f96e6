"""
Exact Oracle for MONOCLE
Brute-force maximum order of a monochromatic (or s-coloured) k-connected
subgraph, an independent cross-check, and annealing search for colourings
with small maximum
"""

import itertools
import logging
import math
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict
from tqdm import tqdm

from .bounds import theorem_bounds
from .errors import DomainError, ResourceLimitError, ensure
from .extract_general import extract_r11, extract_thm_r1k
from .extract_three import extract_thm31k
from .extract_two import extract_thm21k
from .graph_core import ColouredCompleteGraph, SubgraphWitness
from .settings import Settings, load_settings


def _check_levels(k: int, s: int) -> None:
    if k < 1:
        raise DomainError(f"connectivity level must be at least 1, got {k}")
    if s < 1:
        raise DomainError(f"colour budget must be at least 1, got {s}")


def _neighbour_masks(F: ColouredCompleteGraph, colours: Sequence[int]) -> List[int]:
    """adj[v] has bit u set iff uv carries one of the colours"""
    hit = np.isin(F.matrix, colours)
    weights = [1 << u for u in range(F.n)]
    return [sum(w for w, on in zip(weights, row) if on) for row in hit.tolist()]


def _mask_connected(mask: int, adj: List[int]) -> bool:
    if mask == 0:
        return False
    reached = frontier = mask & -mask
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        new = adj[bit.bit_length() - 1] & mask & ~reached
        reached |= new
        frontier |= new
    return reached == mask


def _mask_k_connected(mask: int, members: Sequence[int], adj: List[int], k: int) -> bool:
    """Minimum degree first, then every removal of at most k − 1 members leaves a connected rest"""
    for v in members:
        if bin(adj[v] & mask).count("1") < k:
            return False
    for size in range(k):
        for removed in itertools.combinations(members, size):
            rest = mask
            for v in removed:
                rest &= ~(1 << v)
            if not _mask_connected(rest, adj):
                return False
    return True


def _core_components(F: ColouredCompleteGraph, colours: Sequence[int], k: int) -> List[Tuple[int, ...]]:
    """Vertex sets of the components of the k-core of G_T; every k-connected subgraph lives in one"""
    core = nx.k_core(F.colour_graph(colours), k)
    return [tuple(sorted(c)) for c in sorted(nx.connected_components(core), key=min)]


def exact_M(
    F: ColouredCompleteGraph,
    k: int,
    s: int = 1,
    max_n: Optional[int] = None,
    colour_restricted: bool = False,
    max_component: Optional[int] = None,
) -> Tuple[int, Optional[SubgraphWitness]]:
    """
    Maximum order of a k-connected subgraph using at most s colours.

    Sizes are scanned from n down to k + 1; within a size, colour sets in
    lexicographic order, then subsets of each k-core component in
    lexicographic order. The first hit is the answer. Returns (0, None) when
    nothing of order >= k + 1 is k-connected.

    Full enumeration is refused above max_n vertices. colour_restricted mode
    lifts that limit and instead refuses k-core components above
    max_component vertices.
    """
    _check_levels(k, s)
    oracle = load_settings().oracle if max_n is None or max_component is None else None
    max_n = oracle.max_n if max_n is None else max_n
    max_component = oracle.max_component if max_component is None else max_component
    if not colour_restricted and F.n > max_n:
        raise ResourceLimitError(f"exact_M refuses n = {F.n} > {max_n} without colour-restricted mode")

    palettes = [tuple(T) for T in itertools.combinations(range(1, F.r + 1), min(s, F.r))]
    adjacency: Dict[Tuple[int, ...], List[int]] = {}
    components: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for T in palettes:
        adjacency[T] = _neighbour_masks(F, T)
        components[T] = _core_components(F, T, k)
        if colour_restricted:
            too_big = [c for c in components[T] if len(c) > max_component]
            if too_big:
                raise ResourceLimitError(
                    f"colour set {T} has a {k}-core component of {len(too_big[0])} > {max_component} vertices"
                )

    for size in range(F.n, k, -1):
        for T in palettes:
            adj = adjacency[T]
            for component in components[T]:
                if len(component) < size:
                    continue
                for members in itertools.combinations(component, size):
                    mask = sum(1 << v for v in members)
                    if _mask_k_connected(mask, members, adj, k):
                        logging.debug(f"exact_M: order {size} in colours {T}")
                        return size, SubgraphWitness(vertices=members, colours=T, k=k)
    return 0, None


def exact_M_by_colour(F: ColouredCompleteGraph, k: int, s: int = 1, max_n: Optional[int] = None) -> int:
    """Colour sets first, then all vertex subsets, judged by networkx node connectivity"""
    _check_levels(k, s)
    max_n = load_settings().oracle.max_n if max_n is None else max_n
    if F.n > max_n:
        raise ResourceLimitError(f"exact_M_by_colour refuses n = {F.n} > {max_n}")
    best = 0
    for T in itertools.combinations(range(1, F.r + 1), min(s, F.r)):
        G = F.colour_graph(T)
        for size in range(F.n, max(best, k), -1):
            if any(
                nx.node_connectivity(G.subgraph(S)) >= k
                for S in itertools.combinations(range(F.n), size)
            ):
                best = size
                break
    return best


class ArchiveEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    iteration: int
    value: int


class SearchState(BaseModel):
    """Best colouring found, its objective value and the improvement archive"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    colouring: ColouredCompleteGraph
    value: int
    seed: int
    iterations: int
    objective: str
    exact: bool
    archive: List[ArchiveEntry]


def _surrogate(n: int, r: int, k: int, s: int) -> Optional[Tuple[str, Callable]]:
    """Cheapest extractor whose hypotheses hold for these parameters"""
    if s != 1:
        return None
    if k == 1:
        return "r11", lambda F: extract_r11(F, r)
    if r == 2 and n >= 13 * k - 15:
        return "thm21k", lambda F: extract_thm21k(F, k)
    if r == 3 and n >= 480 * k:
        return "thm31k", lambda F: extract_thm31k(F, k)
    if r >= 3 and n > 11 * (k * k - k) * (r * r - r) and n > 4 * k * r:
        return "thm_r1k", lambda F: extract_thm_r1k(F, k, r)
    return None


def search_objective(n: int, r: int, k: int, s: int, settings: Settings) -> Tuple[str, bool, Callable]:
    """Objective label, whether it is exact, and the function of a colouring"""
    if n <= settings.oracle.exact_objective_max_n:
        return "exact_M", True, lambda F: exact_M(F, k, s, max_n=n, max_component=n)[0]
    surrogate = _surrogate(n, r, k, s)
    if surrogate is None:
        raise ResourceLimitError(f"no affordable objective for n={n}, r={r}, k={k}, s={s}")
    name, extractor = surrogate
    return f"surrogate:{name}", False, lambda F: extractor(F).witness.order


def _moves(n: int, r: int, rng: np.random.Generator) -> Iterator[Tuple[int, int, int]]:
    """Endless single-edge recolour moves (u, v, colour index offset)"""
    while True:
        u, v = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
        yield u, v, int(rng.integers(1, r))


def adversarial_search(
    n: int,
    r: int,
    k: int,
    s: int,
    iterations: int,
    seed: int,
    start: Optional[ColouredCompleteGraph] = None,
    settings: Optional[Settings] = None,
    progress: Optional[bool] = None,
) -> SearchState:
    """
    Simulated annealing over colourings of K_n minimising the objective.

    A move recolours one edge to a different colour; a worse move is kept
    with probability exp(−Δ/T), with T cooled geometrically. The archive
    records every strict improvement of the best value.
    """
    settings = settings or load_settings()
    if n < 2 or r < 1:
        raise DomainError(f"need n ⩾ 2 and r ⩾ 1, got n={n}, r={r}")
    if start is not None and (start.n, start.r) != (n, r):
        raise DomainError(f"start colouring has n={start.n}, r={start.r}, expected n={n}, r={r}")
    label, exact, objective = search_objective(n, r, k, s, settings)
    cache: Dict[ColouredCompleteGraph, int] = {}

    def value_of(F: ColouredCompleteGraph) -> int:
        if F not in cache:
            cache[F] = objective(F)
        return cache[F]

    rng = np.random.default_rng(seed)
    current = start if start is not None else ColouredCompleteGraph.random(n, r, rng)
    value = value_of(current)
    best, best_value = current, value
    archive = [ArchiveEntry(iteration=0, value=value)]
    temperature = settings.search.initial_temperature
    show = settings.search.progress if progress is None else progress

    if r >= 2:
        moves = _moves(n, r, rng)
        for iteration in tqdm(range(1, iterations + 1), desc="search", disable=not show):
            u, v, offset = next(moves)
            colour = (current.colour(u, v) - 1 + offset) % r + 1
            candidate = current.recoloured(u, v, colour)
            delta = value_of(candidate) - value
            if delta <= 0 or rng.random() < math.exp(-delta / temperature):
                current, value = candidate, value_of(candidate)
                if value < best_value:
                    best, best_value = current, value
                    archive.append(ArchiveEntry(iteration=iteration, value=value))
                    logging.info(f"search: {label} improved to {value} at iteration {iteration}")
            temperature = max(temperature * settings.search.cooling, settings.search.min_temperature)

    if exact and s == 1:
        lower = theorem_bounds(n, r, k).lower
        ensure(lower is None or best_value >= lower, f"search found M = {best_value} below proven lower bound {lower}")
    return SearchState(
        colouring=best, value=best_value, seed=seed, iterations=iterations,
        objective=label, exact=exact, archive=archive,
    )
