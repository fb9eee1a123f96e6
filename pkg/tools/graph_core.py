"""
Graph Core for MONOCLE
Coloured complete graphs, exact vertex connectivity with certificates,
and the local tools shared by every extractor (closure, intersection test,
component sizes, low-degree peeling)
"""

import heapq
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    local_node_connectivity,
    minimum_st_node_cut,
)
from networkx.algorithms.flow import build_residual_network
from pydantic import BaseModel, ConfigDict, model_validator

from .errors import DomainError, ParameterError, PreconditionError

# Subgraphs, colour classes and bipartite views are plain networkx graphs
# whose nodes keep the vertex labels of the host colouring.
SimpleGraph = nx.Graph
Colours = Union[int, Iterable[int]]


class CutCertificate(BaseModel):
    """A separator of size < k together with a pair it separates"""

    model_config = ConfigDict(frozen=True)

    separator: Tuple[int, ...]
    a: int
    b: int

    def replay(self, G: SimpleGraph) -> bool:
        """True iff deleting the separator leaves a and b in different components"""
        removed = set(self.separator)
        if self.a in removed or self.b in removed or self.a == self.b:
            return False
        rest = G.subgraph(set(G) - removed)
        return self.a in rest and self.b in rest and not nx.has_path(rest, self.a, self.b)


class SubgraphWitness(BaseModel):
    """Vertex set + colour set + k; the induced graph on those colours is k-connected"""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    colours: Tuple[int, ...]
    k: int
    order: int = 0

    @model_validator(mode="before")
    @classmethod
    def _normalise(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            data["vertices"] = tuple(sorted({int(v) for v in data.get("vertices", ())}))
            data["colours"] = tuple(sorted({int(c) for c in data.get("colours", ())}))
            data["order"] = len(data["vertices"])
        return data


def _colour_tuple(colours: Colours) -> Tuple[int, ...]:
    if isinstance(colours, (int, np.integer)):
        return (int(colours),)
    return tuple(sorted({int(c) for c in colours}))


def _edges_from_mask(labels: np.ndarray, mask: np.ndarray) -> Iterator[Tuple[int, int]]:
    rows, cols = np.triu_indices(len(labels), 1)
    selected = mask[rows, cols]
    return zip(labels[rows[selected]].tolist(), labels[cols[selected]].tolist())


class ColouredCompleteGraph:
    """
    An r-colouring of E(K_n), stored as a read-only symmetric n×n matrix.

    Vertices are 0..n-1, colours 1..r, and the diagonal holds 0.
    """

    def __init__(self, matrix, r: int):
        m = np.array(matrix, dtype=np.int16, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError("colour matrix must be square")
        n = m.shape[0]
        if n < 2:
            raise DomainError("a colouring needs at least 2 vertices")
        if r < 1:
            raise DomainError("a colouring needs at least one colour")
        if not np.array_equal(m, m.T):
            raise DomainError("colour matrix must be symmetric")
        if np.any(np.diag(m) != 0):
            raise DomainError("colour matrix diagonal must be 0")
        off = m[~np.eye(n, dtype=bool)]
        if off.size and (off.min() < 1 or off.max() > r):
            raise DomainError(f"every edge needs a colour in 1..{r}")
        m.setflags(write=False)
        self.matrix = m
        self.n = n
        self.r = int(r)

    @classmethod
    def from_function(cls, n: int, r: int, colour_of) -> "ColouredCompleteGraph":
        m = np.zeros((n, n), dtype=np.int16)
        for u in range(n):
            for v in range(u + 1, n):
                m[u, v] = m[v, u] = colour_of(u, v)
        return cls(m, r)

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Tuple[int, int, int]]) -> "ColouredCompleteGraph":
        m = np.zeros((n, n), dtype=np.int16)
        for u, v, c in edges:
            m[u, v] = m[v, u] = c
        return cls(m, r)

    @classmethod
    def monochromatic(cls, n: int, r: int = 1, colour: int = 1) -> "ColouredCompleteGraph":
        m = np.full((n, n), colour, dtype=np.int16)
        np.fill_diagonal(m, 0)
        return cls(m, r)

    @classmethod
    def random(cls, n: int, r: int, rng: Union[int, np.random.Generator, None] = None) -> "ColouredCompleteGraph":
        """Uniform random colouring; rng may be a seed or a numpy Generator"""
        rng = np.random.default_rng(rng)
        upper = np.triu(rng.integers(1, r + 1, size=(n, n), dtype=np.int16), 1)
        return cls(upper + upper.T, r)

    def colour(self, u: int, v: int) -> int:
        if u == v:
            raise DomainError("loops carry no colour")
        return int(self.matrix[u, v])

    def edges(self) -> Iterator[Tuple[int, int, int]]:
        """All edges (u, v, c) with u < v in lexicographic order"""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, int(self.matrix[u, v])

    def edge_counts(self) -> np.ndarray:
        """Number of edges per colour; index 0 is unused"""
        upper = self.matrix[np.triu_indices(self.n, 1)]
        return np.bincount(upper, minlength=self.r + 1)

    def colour_degrees(self, colours: Colours, within: Optional[Sequence[int]] = None) -> np.ndarray:
        """Degree of every vertex counting only edges into `within` (default all) in the given colours"""
        mask = np.isin(self.matrix, _colour_tuple(colours))
        if within is not None:
            return mask[:, np.asarray(sorted(within), dtype=int)].sum(axis=1)
        return mask.sum(axis=1)

    def colour_graph(self, colours: Colours, vertices: Optional[Iterable[int]] = None) -> SimpleGraph:
        """The graph on `vertices` (default all) whose edges carry one of `colours`"""
        labels = np.arange(self.n) if vertices is None else np.asarray(sorted(set(vertices)), dtype=int)
        sub = self.matrix[np.ix_(labels, labels)]
        G = nx.Graph()
        G.add_nodes_from(labels.tolist())
        G.add_edges_from(_edges_from_mask(labels, np.isin(sub, _colour_tuple(colours))))
        return G

    def bipartite_view(self, left: Sequence[int], right: Sequence[int]) -> "ColouredBipartiteGraph":
        left, right = sorted(left), sorted(right)
        return ColouredBipartiteGraph(left, right, self.matrix[np.ix_(left, right)], self.r)

    def recoloured(self, u: int, v: int, colour: int) -> "ColouredCompleteGraph":
        m = self.matrix.copy()
        m[u, v] = m[v, u] = colour
        return ColouredCompleteGraph(m, self.r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColouredCompleteGraph)
            and self.r == other.r
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.r, self.matrix.tobytes()))

    def __repr__(self) -> str:
        return f"ColouredCompleteGraph(n={self.n}, r={self.r})"


class ColouredBipartiteGraph:
    """
    An r-colouring of a complete bipartite graph between labelled parts.

    matrix[i, j] is the colour of the edge left[i]–right[j].
    """

    def __init__(self, left: Sequence[int], right: Sequence[int], matrix, r: int):
        self.left = tuple(int(v) for v in left)
        self.right = tuple(int(v) for v in right)
        if set(self.left) & set(self.right):
            raise ParameterError("bipartite parts must be disjoint")
        m = np.array(matrix, dtype=np.int16, copy=True).reshape(len(self.left), len(self.right))
        if m.size and (m.min() < 1 or m.max() > r):
            raise DomainError(f"every edge needs a colour in 1..{r}")
        m.setflags(write=False)
        self.matrix = m
        self.r = int(r)
        self._position = {v: ("L", i) for i, v in enumerate(self.left)}
        self._position.update({v: ("R", j) for j, v in enumerate(self.right)})

    @classmethod
    def standard(cls, m: int, n: int, r: int, matrix) -> "ColouredBipartiteGraph":
        """Parts labelled 0..m-1 and m..m+n-1"""
        return cls(range(m), range(m, m + n), matrix, r)

    @property
    def m(self) -> int:
        return len(self.left)

    @property
    def n(self) -> int:
        return len(self.right)

    def colour(self, u: int, v: int) -> int:
        (su, iu), (sv, iv) = self._position[u], self._position[v]
        if su == sv:
            raise DomainError("vertices on the same side are not joined")
        return int(self.matrix[iu, iv] if su == "L" else self.matrix[iv, iu])

    def edge_counts(self) -> np.ndarray:
        return np.bincount(self.matrix.ravel(), minlength=self.r + 1)

    def colour_graph(self, colours: Colours, vertices: Optional[Iterable[int]] = None) -> SimpleGraph:
        keep = None if vertices is None else set(vertices)
        rows = [i for i, v in enumerate(self.left) if keep is None or v in keep]
        cols = [j for j, v in enumerate(self.right) if keep is None or v in keep]
        G = nx.Graph()
        G.add_nodes_from(self.left[i] for i in rows)
        G.add_nodes_from(self.right[j] for j in cols)
        if rows and cols:
            mask = np.isin(self.matrix[np.ix_(rows, cols)], _colour_tuple(colours))
            for a, b in zip(*np.nonzero(mask)):
                G.add_edge(self.left[rows[a]], self.right[cols[b]])
        return G

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColouredBipartiteGraph)
            and (self.left, self.right, self.r) == (other.left, other.right, other.r)
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.left, self.right, self.r, self.matrix.tobytes()))

    def __repr__(self) -> str:
        return f"ColouredBipartiteGraph(m={self.m}, n={self.n}, r={self.r})"


def sorted_components(G: SimpleGraph) -> List[FrozenSet[int]]:
    """Connected components ordered by their smallest vertex"""
    return sorted((frozenset(c) for c in nx.connected_components(G)), key=min)


def largest_component_order(G: SimpleGraph) -> int:
    if G.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.connected_components(G))


def _split_certificate(G: SimpleGraph, separator: Iterable[int]) -> Optional[CutCertificate]:
    separator = tuple(sorted(separator))
    parts = sorted_components(G.subgraph(set(G) - set(separator)))
    if len(parts) < 2:
        return None
    return CutCertificate(separator=separator, a=min(parts[0]), b=min(parts[1]))


def _auxiliary(G: SimpleGraph):
    H = build_auxiliary_node_connectivity(G)
    return H, build_residual_network(H, "capacity")


def is_k_connected(G: SimpleGraph, k: int) -> Tuple[bool, Optional[CutCertificate]]:
    """
    Decide k-connectivity; on "no" return a separator of size < k when |V| > k.

    Graphs on at most k vertices are never k-connected. Cheap exits come
    first (components, minimum degree, articulation points, and the
    common-neighbour certificate: if every non-adjacent pair has k common
    neighbours no set of k-1 vertices separates anything). Remaining pairs are
    settled by unit-capacity max-flow over k schedule vertices.
    """
    if k < 1:
        raise DomainError(f"connectivity level must be at least 1, got {k}")
    n = G.number_of_nodes()
    if n <= k:
        return False, None
    if not nx.is_connected(G):
        return False, _split_certificate(G, ())
    if k == 1:
        return True, None

    degree, v = min((d, u) for u, d in G.degree())
    if degree < k:
        b = min(u for u in G if u != v and not G.has_edge(v, u))
        return False, CutCertificate(separator=tuple(sorted(G[v])), a=v, b=b)
    if degree == n - 1:
        return True, None
    if k == 2:
        points = sorted(nx.articulation_points(G))
        return (True, None) if not points else (False, _split_certificate(G, points[:1]))

    nodes = sorted(G)
    A = nx.to_numpy_array(G, nodelist=nodes, dtype=float)
    common = A @ A
    open_pairs = (A == 0) & (common < k)
    np.fill_diagonal(open_pairs, False)
    if not open_pairs.any():
        return True, None

    degrees = A.sum(axis=1)
    schedule = sorted(range(n), key=lambda i: (-degrees[i], nodes[i]))[:k]
    H, R = _auxiliary(G)
    for i in schedule:
        s = nodes[i]
        for j in np.flatnonzero(open_pairs[i]):
            t = nodes[j]
            if local_node_connectivity(G, s, t, auxiliary=H, residual=R, cutoff=k) < k:
                cut = minimum_st_node_cut(G, s, t, auxiliary=H, residual=R)
                logging.debug(f"separator {sorted(cut)} splits {s} from {t}")
                return False, CutCertificate(separator=tuple(sorted(cut)), a=s, b=t)
    return True, None


def vertex_connectivity(G: SimpleGraph) -> Tuple[int, Optional[CutCertificate]]:
    """
    Exact vertex connectivity with a minimum separator.

    Among the minimum separators met by the scan, the lexicographically
    smallest sorted tuple is returned. Complete graphs give |V|-1 and no cut.
    """
    n = G.number_of_nodes()
    if n < 2:
        raise DomainError("vertex connectivity needs at least 2 vertices")
    if not nx.is_connected(G):
        return 0, _split_certificate(G, ())
    degree, v = min((d, u) for u, d in G.degree())
    if degree == n - 1:
        return n - 1, None

    nodes = sorted(G)
    H, R = _auxiliary(G)
    best = degree
    t0 = min(u for u in nodes if u != v and not G.has_edge(v, u))
    candidates = [(min(v, t0), max(v, t0))]
    for i, s in enumerate(nodes):
        if i > best:
            break
        for t in nodes[i + 1:]:
            if G.has_edge(s, t):
                continue
            local = local_node_connectivity(G, s, t, auxiliary=H, residual=R, cutoff=best)
            if local < best:
                best, candidates = local, [(s, t)]
            elif local == best:
                candidates.append((s, t))

    found = []
    for s, t in dict.fromkeys(candidates):
        cut = tuple(sorted(minimum_st_node_cut(G, s, t, auxiliary=H, residual=R)))
        if len(cut) == best:
            found.append((cut, s, t))
    cut, a, b = min(found)
    return best, CutCertificate(separator=cut, a=a, b=b)


def peel_low_degree(G: SimpleGraph, threshold: int) -> List[int]:
    """
    Repeatedly delete a vertex of degree <= threshold (smallest label first).

    Returns the deleted vertices in deletion order; the survivors form the
    (threshold+1)-core of G.
    """
    degrees: Dict[int, int] = dict(G.degree())
    alive = set(G)
    heap = [u for u in G if degrees[u] <= threshold]
    heapq.heapify(heap)
    removed = []
    while heap:
        u = heapq.heappop(heap)
        if u not in alive:
            continue
        alive.discard(u)
        removed.append(u)
        for w in G[u]:
            if w in alive:
                degrees[w] -= 1
                if degrees[w] == threshold:
                    heapq.heappush(heap, w)
    return removed


def closure_addvtx(
    F: ColouredCompleteGraph,
    colour: int,
    seed: Iterable[int],
    k: int,
    order: Optional[Sequence[int]] = None,
    check: bool = True,
) -> FrozenSet[int]:
    """
    Grow a k-connected colour class by vertices with at least k neighbours inside.

    Args:
        F: the host colouring
        colour: colour i of the class
        seed: vertex set whose colour-i graph is k-connected
        k: connectivity level
        order: visiting order for each round (default increasing label)
        check: verify the seed before growing it

    Returns:
        S ⊇ seed, k-connected in colour i, with every outside vertex sending
        at most k-1 colour-i edges into S
    """
    seed = sorted(set(seed))
    if check and not is_k_connected(F.colour_graph(colour, seed), k)[0]:
        raise PreconditionError(f"seed not {k}-connected in colour {colour}")
    visit = list(range(F.n)) if order is None else list(order)
    adjacent = F.matrix == colour
    inside = np.zeros(F.n, dtype=bool)
    inside[seed] = True
    counts = adjacent[:, inside].sum(axis=1)
    changed = True
    while changed:
        changed = False
        for v in visit:
            if not inside[v] and counts[v] >= k:
                inside[v] = True
                counts += adjacent[:, v]
                changed = True
    grown = frozenset(np.flatnonzero(inside).tolist())
    logging.debug(f"closure in colour {colour}: {len(seed)} -> {len(grown)} vertices")
    return grown


def certify_intersect(B: SimpleGraph, M: Iterable[int], N: Iterable[int], k: int) -> bool:
    """
    Sufficient test for k-connectivity of a bipartite graph with parts M, N.

    True iff every x in M has at least k neighbours in N and every two
    vertices of N share at least k neighbours in M.
    """
    M, N = sorted(set(M)), sorted(set(N))
    if not M or not N or set(M) & set(N):
        return False
    col = {x: j for j, x in enumerate(M)}
    A = np.zeros((len(N), len(M)))
    for i, y in enumerate(N):
        for x in B[y] if y in B else ():
            if x in col:
                A[i, col[x]] = 1
    if A.sum(axis=0).min() < k:
        return False
    if len(N) > 1:
        common = A @ A.T
        np.fill_diagonal(common, np.inf)
        if common.min() < k:
            return False
    return True


def verify_witness(F: Union[ColouredCompleteGraph, ColouredBipartiteGraph], witness: SubgraphWitness) -> bool:
    """Re-check a witness against the colouring it claims to live in"""
    if witness.order < witness.k + 1:
        return False
    G = F.colour_graph(witness.colours, witness.vertices)
    if G.number_of_nodes() != witness.order:
        return False
    return is_k_connected(G, witness.k)[0]
