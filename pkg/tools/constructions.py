"""
Extremal Colourings for MONOCLE
Generators for the colourings that bound monochromatic k-connected order
from above, each returned with its claimed bound and block layout
"""

import logging
import math
from typing import Callable, Dict, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from .algebra import build_affine_plane, decompose_hamilton_paths
from .errors import ParameterError, UnsupportedOrderError
from .graph_core import ColouredBipartiteGraph, ColouredCompleteGraph

RED, BLUE = 1, 2


class ConstructionReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str
    colouring: Union[ColouredCompleteGraph, ColouredBipartiteGraph]
    claimed_bound: int
    parameters: Dict[str, int]
    blocks: Dict[str, Tuple[int, ...]]
    formula_bound: int = 0

    def metadata(self) -> Dict[str, str]:
        """Comment header written in front of the colouring file"""
        params = " ".join(f"{key}={value}" for key, value in self.parameters.items())
        return {"construction": self.kind, "parameters": params, "claimedBound": str(self.claimed_bound)}


def balanced_sizes(total: int, parts: int) -> Tuple[int, ...]:
    """Sizes differing by at most one, larger parts first"""
    base, extra = divmod(total, parts)
    return tuple(base + (i < extra) for i in range(parts))


def _consecutive_blocks(names, sizes, start: int = 0) -> Dict[str, Tuple[int, ...]]:
    blocks = {}
    for name, size in zip(names, sizes):
        blocks[name] = tuple(range(start, start + size))
        start += size
    return blocks


def _block_index(n: int, blocks: Dict[str, Tuple[int, ...]]) -> np.ndarray:
    index = np.zeros(n, dtype=int)
    for b, members in enumerate(blocks.values()):
        index[list(members)] = b
    return index


def _from_block_table(n: int, r: int, index: np.ndarray, table: np.ndarray) -> ColouredCompleteGraph:
    matrix = table[index[:, None], index[None, :]]
    np.fill_diagonal(matrix, 0)
    return ColouredCompleteGraph(matrix, r)


def construct_bg(n: int, k: int) -> ConstructionReport:
    """
    Two-colouring of K_n with blocks A_1..A_4 of size k-1 and B of size n-4k+4.

    Red: A_1A_2, A_1A_3, A_2A_4 and A_1B, A_2B. Blue: the other block pairs.
    Inside blocks A_1, A_2, B are red and A_3, A_4 blue; for n = 4k-4 (B empty)
    A_1, A_2 are blue cliques and A_3, A_4 red cliques.
    """
    if k < 1 or n < max(2, 4 * k - 4):
        raise ParameterError(f"n ⩾ 4k−4 with n ⩾ 2 required, got n={n}, k={k}")
    variant = n == 4 * k - 4
    blocks = _consecutive_blocks(["A1", "A2", "A3", "A4", "B"], [k - 1] * 4 + [n - 4 * k + 4])

    table = np.full((5, 5), BLUE, dtype=np.int16)
    for i, j in [(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)]:
        table[i, j] = table[j, i] = RED
    inside_red = (2, 3) if variant else (0, 1, 4)
    for i in range(5):
        table[i, i] = RED if i in inside_red else BLUE

    colouring = _from_block_table(n, 2, _block_index(n, blocks), table)
    claimed = 0 if variant else n - 2 * k + 2
    logging.debug(f"bg colouring n={n} k={k} claimed bound {claimed}")
    return ConstructionReport(
        kind="bg", colouring=colouring, claimed_bound=claimed,
        parameters={"n": n, "k": k}, blocks=blocks, formula_bound=claimed,
    )


def affine_layout(n: int, r: int, k: int) -> Tuple[int, ...]:
    """Sizes of V_1..V_{(r-1)^2}, the balanced split of the n - r(k-1) free vertices"""
    return balanced_sizes(n - r * (k - 1), (r - 1) ** 2)


def affine_formula_bound(n: int, r: int, k: int) -> int:
    q = r - 1
    return q * math.ceil((n - r * (k - 1)) / q ** 2) + k - 1


def affine_line_bound(n: int, r: int, k: int) -> int:
    """
    Heaviest line of the plane plus k-1.

    A monochromatic k-connected subgraph meets the V_i of a single line and
    at most the k-1 vertices of one C_i. This equals the closed formula when
    (r-1)^2 divides n - r(k-1), and gives the mod-4 case split for r = 3.
    """
    plane = build_affine_plane(r - 1)
    sizes = affine_layout(n, r, k)
    return max(sum(sizes[p] for p in line) for _, line in plane.lines()) + k - 1


def construct_affine(n: int, r: int, k: int) -> ConstructionReport:
    """
    r-colouring from the affine plane of order r-1.

    Blocks C_1..C_r of size k-1 come first, then V_1..V_{(r-1)^2} covering W.
    V_i–V_j gets the class index (1-based) of the line through p_i, p_j;
    inside V_i colour 1; C_i–W colour i; C_i–C_j colour min(i, j).
    """
    q = r - 1
    try:
        plane = build_affine_plane(q)
    except UnsupportedOrderError:
        raise UnsupportedOrderError(q, name="r−1") from None
    if k < 1 or n < max(2, r * (k - 1)):
        raise ParameterError(f"n ⩾ r(k−1) required, got n={n}, r={r}, k={k}")

    sizes = affine_layout(n, r, k)
    names = [f"C{i}" for i in range(1, r + 1)] + [f"V{i}" for i in range(1, q * q + 1)]
    blocks = _consecutive_blocks(names, [k - 1] * r + list(sizes))

    classes = np.ones((q * q, q * q), dtype=np.int16)
    for u in range(q * q):
        for v in range(q * q):
            if u != v:
                classes[u, v] = plane.class_joining(u, v) + 1

    table = np.zeros((r + q * q, r + q * q), dtype=np.int16)
    c = np.arange(1, r + 1)
    table[:r, :r] = np.minimum(c[:, None], c[None, :])
    table[:r, r:] = c[:, None]
    table[r:, :r] = c[None, :]
    table[r:, r:] = classes

    colouring = _from_block_table(n, r, _block_index(n, blocks), table)
    return ConstructionReport(
        kind="affine", colouring=colouring, claimed_bound=affine_line_bound(n, r, k),
        parameters={"n": n, "r": r, "k": k}, blocks=blocks,
        formula_bound=affine_formula_bound(n, r, k),
    )


def construct_hamzero(n: int, r: int, k: int) -> ConstructionReport:
    """Blow up the r zigzag Hamilton paths of K_2r by blocks of size at most k-1"""
    if k < 2 or r < 1 or not 2 <= n <= 2 * r * (k - 1):
        raise ParameterError(f"2 ⩽ n ⩽ 2r(k−1) with k ⩾ 2 required, got n={n}, r={r}, k={k}")
    decomposition = decompose_hamilton_paths(r)
    owner = decomposition.path_of_edge()
    blocks = _consecutive_blocks([f"D{i}" for i in range(1, 2 * r + 1)], balanced_sizes(n, 2 * r))

    table = np.zeros((2 * r, 2 * r), dtype=np.int16)
    for i in range(2 * r):
        table[i, i] = decomposition.path_ending_at(i) + 1
        for j in range(i + 1, 2 * r):
            table[i, j] = table[j, i] = owner[(i, j)] + 1

    colouring = _from_block_table(n, r, _block_index(n, blocks), table)
    return ConstructionReport(
        kind="hamzero", colouring=colouring, claimed_bound=0,
        parameters={"n": n, "r": r, "k": k}, blocks=blocks,
    )


def construct_bipartite_modular(m: int, n: int, r: int) -> ConstructionReport:
    """K_{m,n} with M_i–N_j coloured ((i − j) mod r) + 1"""
    if r < 1 or m < 1 or n < 1 or m % r or n % r:
        raise ParameterError(f"r must divide m and n, got m={m}, n={n}, r={r}")
    i = np.arange(m) // (m // r)
    j = np.arange(n) // (n // r)
    matrix = (i[:, None] - j[None, :]) % r + 1
    blocks = _consecutive_blocks([f"M{t}" for t in range(1, r + 1)], [m // r] * r)
    blocks.update(_consecutive_blocks([f"N{t}" for t in range(1, r + 1)], [n // r] * r, start=m))
    return ConstructionReport(
        kind="bipmod", colouring=ColouredBipartiteGraph.standard(m, n, r, matrix),
        claimed_bound=(m + n) // r, parameters={"m": m, "n": n, "r": r}, blocks=blocks,
        formula_bound=(m + n) // r,
    )


CONSTRUCTIONS: Dict[str, Callable[..., ConstructionReport]] = {
    "bg": construct_bg,
    "affine": construct_affine,
    "hamzero": construct_hamzero,
    "bipmod": construct_bipartite_modular,
}
