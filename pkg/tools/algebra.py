"""
Algebra Engines for MONOCLE
Finite fields GF(p^m), the field affine planes AG(2, q), and the zigzag
Hamilton path decomposition of K_2r
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np

from .errors import ParameterError, UnsupportedOrderError, ensure

Poly = Tuple[int, ...]  # coefficients, constant term first


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, m) with q = p^m, or raise UnsupportedOrderError"""
    if q < 2:
        raise UnsupportedOrderError(q)
    p = next(d for d in itertools.count(2) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise UnsupportedOrderError(q)
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
        return True
    except UnsupportedOrderError:
        return False


def _trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    """Remainder of a modulo the monic polynomial b over Z_p"""
    rem = list(_trim(a))
    b = _trim(b)
    shift = len(rem) - len(b)
    while shift >= 0 and rem:
        lead = rem[-1]
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem = list(_trim(rem))
        shift = len(rem) - len(b)
    return tuple(rem)


def _monic(degree: int, p: int):
    """Monic polynomials of a given degree in lexicographic order of (c_{d-1}, ..., c_0)"""
    for tail in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2"""
    poly = _trim(poly)
    degree = len(poly) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for divisor in _monic(d, p):
            if not poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Poly:
    """Lexicographically smallest monic irreducible of degree m, reading coefficients from the top"""
    return next(f for f in _monic(m, p) if is_irreducible(f, p))


class FiniteField:
    """
    GF(p^m) with elements encoded as integers 0..q-1.

    Element x stands for the polynomial sum c_i t^i where c_i is the i-th
    base-p digit of x. Addition and multiplication are table lookups.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = _trim(modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {m}")
        if not is_irreducible(self.modulus, p):
            raise ParameterError(f"modulus {self.modulus} is reducible over Z_{p}")

        q = self.q
        digits = np.array([self.coefficients(x) for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(m)
        self.add_table = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int64)
        self.mul_table = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                self.mul_table[a, b] = self.mul_table[b, a] = self._multiply(digits[a], digits[b])
        self.neg_table = np.argmin(self.add_table, axis=1)
        self.inv_table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.flatnonzero(self.mul_table[a] == 1)
            ensure(len(hits) == 1, f"element {a} of GF({q}) has no unique inverse")
            self.inv_table[a] = hits[0]
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)

    def coefficients(self, x: int) -> Tuple[int, ...]:
        return tuple((x // self.p ** i) % self.p for i in range(self.m))

    def element(self, coefficients: Sequence[int]) -> int:
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coefficients))

    def _multiply(self, a: Sequence[int], b: Sequence[int]) -> int:
        product = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + int(x) * int(y)) % self.p
        return self.element(poly_mod(product, self.modulus, self.p))

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def build_field(q: int) -> FiniteField:
    """Field of order q with the canonical modulus; UnsupportedOrderError otherwise"""
    p, m = prime_power(q)
    field = FiniteField(p, m, smallest_irreducible(p, m))
    logging.debug(f"built {field}")
    return field


@dataclass(frozen=True, eq=False)
class AffinePlane:
    """
    AG(2, q): points (x, y) with id x*q + y, and q+1 parallel classes.

    Classes 0..q-1 hold the lines y = a x + b for slope a (line index b);
    class q holds the verticals x = c (line index c).
    """

    q: int
    points: Tuple[Tuple[int, int], ...]
    classes: Tuple[Tuple[Tuple[int, ...], ...], ...]
    line_of: np.ndarray  # line_of[class, point] = line index
    field: FiniteField

    def class_joining(self, u: int, v: int) -> int:
        """Index of the parallel class containing the line through points u and v"""
        (x1, y1), (x2, y2) = self.points[u], self.points[v]
        if u == v:
            raise ParameterError("a line needs two distinct points")
        if x1 == x2:
            return self.q
        F = self.field
        return F.div(F.sub(y2, y1), F.sub(x2, x1))

    def lines(self):
        for t, lines in enumerate(self.classes):
            for line in lines:
                yield t, line


@lru_cache(maxsize=None)
def build_affine_plane(q: int) -> AffinePlane:
    F = build_field(q)
    points = tuple((x, y) for x in range(q) for y in range(q))
    line_of = np.zeros((q + 1, q * q), dtype=np.int64)
    classes = []
    for a in range(q):
        lines: Dict[int, list] = {b: [] for b in range(q)}
        for pid, (x, y) in enumerate(points):
            b = F.sub(y, F.mul(a, x))
            lines[b].append(pid)
            line_of[a, pid] = b
        classes.append(tuple(tuple(lines[b]) for b in range(q)))
    for pid, (x, _) in enumerate(points):
        line_of[q, pid] = x
    classes.append(tuple(tuple(x * q + y for y in range(q)) for x in range(q)))
    line_of.setflags(write=False)
    return AffinePlane(q=q, points=points, classes=tuple(classes), line_of=line_of, field=F)


@dataclass(frozen=True)
class HamiltonPathDecomposition:
    order: int
    paths: Tuple[Tuple[int, ...], ...]

    def path_of_edge(self) -> Dict[Tuple[int, int], int]:
        owner = {}
        for t, path in enumerate(self.paths):
            for u, v in zip(path, path[1:]):
                owner[(min(u, v), max(u, v))] = t
        return owner

    def path_ending_at(self, v: int) -> int:
        return next(t for t, path in enumerate(self.paths) if v in (path[0], path[-1]))


def decompose_hamilton_paths(r: int) -> HamiltonPathDecomposition:
    """Zigzag paths t, t+1, t-1, t+2, t-2, ..., t+r (mod 2r) for t = 0..r-1"""
    if r < 1:
        raise ParameterError("need r >= 1")
    order = 2 * r
    offsets = [0] + [s for j in range(1, r) for s in (j, -j)] + [r]
    paths = tuple(tuple((t + o) % order for o in offsets) for t in range(r))
    decomposition = HamiltonPathDecomposition(order=order, paths=paths)
    ensure(len(decomposition.path_of_edge()) == r * (order - 1), "zigzag paths overlap")
    return decomposition
