"""
Bounds Table for MONOCLE
Sharpest known lower and upper bounds on the largest monochromatic
k-connected subgraph, each labelled by its source in config/theorems.yaml
"""

import logging
import os
from fractions import Fraction
from math import ceil
from typing import Any, Dict, List, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, model_validator

from .algebra import is_prime_power
from .constructions import affine_line_bound
from .errors import DomainError
from .extract_three import thm31k_guarantee
from .extract_two import REMARK_MIN_K, thm21k_threshold

Candidate = Tuple[int, str]


def load_theorem_catalogue() -> Dict[str, Any]:
    """Load the bound labels from YAML configuration"""
    try:
        catalogue_path = os.path.join(os.path.dirname(__file__), '..', 'config', 'theorems.yaml')
        with open(catalogue_path, 'r') as file:
            return yaml.safe_load(file)
    except Exception as e:
        logging.error(f"Error loading theorem catalogue: {e}")
        return {}


def _label(catalogue: Dict[str, Any], kind: str, key: Optional[str]) -> Optional[str]:
    if key is None:
        return None
    return (catalogue.get(kind) or {}).get(key, key)


class _Summary(BaseModel):
    def summary(self) -> str:
        def show(value):
            return "unknown" if value is None else str(value)

        if self.lower == self.upper and self.lower is not None:
            sources = self.lower_source
        else:
            sources = "; ".join(s for s in (self.lower_source, self.upper_source) if s) or "no applicable bound"
        return f"lower {show(self.lower)} upper {show(self.upper)} ({sources})"

    def conjecture_summary(self) -> Optional[str]:
        if not self.conjectured:
            return None
        return f"conjectured {self.conjectured_value} ({self.conjectured_source})"

    @model_validator(mode="after")
    def _ordered(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        return self


class BoundsRow(_Summary):
    model_config = ConfigDict(frozen=True)

    n: int
    r: int
    s: int = 1
    k: int
    lower: Optional[int] = None
    upper: Optional[int] = None
    lower_source: Optional[str] = None
    upper_source: Optional[str] = None
    conjectured: bool = False
    conjectured_value: Optional[int] = None
    conjectured_source: Optional[str] = None


class BipartiteBoundsRow(_Summary):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    r: int
    s: int = 1
    k: int
    lower: Optional[int] = None
    upper: Optional[int] = None
    lower_source: Optional[str] = None
    upper_source: Optional[str] = None
    conjectured: bool = False
    conjectured_value: Optional[int] = None
    conjectured_source: Optional[str] = None


def _best(candidates: List[Candidate], pick) -> Tuple[Optional[int], Optional[str]]:
    """pick = max for lower bounds, min for upper; earlier candidates win ties"""
    if not candidates:
        return None, None
    value = pick(v for v, _ in candidates)
    return value, next(key for v, key in candidates if v == value)


def fallback_order(r: int) -> int:
    """Largest r′ ⩽ r with r′ − 1 a prime power"""
    return next(t for t in range(r, 2, -1) if is_prime_power(t - 1))


def r1k_lower_bounds(n: int, r: int, k: int) -> List[Candidate]:
    """Every applicable n/(r−1) − O(k²r) lower bound for r ⩾ 3 colours"""
    found: List[Candidate] = []
    base = Fraction(n, r - 1)
    if n > 11 * (k * k - k) * (r * r - r) and n > 4 * k * r:
        found.append((ceil(base - 11 * (k * k - k) * r), "r1k"))
    if n >= 44 * k * k * r * r:
        found.append((ceil(base - 2 * k * k * r), "r1k_extra"))
    if n >= 13 * k * k * r * r:
        # smallest ε with n ⩾ 11(2+ε)k²r²/ε
        eps = Fraction(22 * k * k * r * r, n - 11 * k * k * r * r)
        found.append((ceil(base - (1 + Fraction(1, r * (r - 2)) + eps) * k * k * r), "r1k_epsilon"))
    return [(max(v, 0), key) for v, key in found]


def theorem_bounds(n: int, r: int, k: int) -> BoundsRow:
    """Sharpest labelled lower and upper bounds on m(n, r, 1, k), plus the conjectured value"""
    if n < 2 or r < 1 or k < 1:
        raise DomainError(f"need n ⩾ 2, r ⩾ 1, k ⩾ 1, got n={n}, r={r}, k={k}")
    lowers: List[Candidate] = []
    uppers: List[Candidate] = []

    if n <= k:
        lowers.append((0, "too_small"))
        uppers.append((0, "too_small"))
    elif r == 1:
        lowers.append((n, "single_colour"))
        uppers.append((n, "single_colour"))
    elif k >= 2 and n <= 2 * r * (k - 1):
        lowers.append((0, "zero"))
        uppers.append((0, "zero"))
    else:
        if k == 1:
            lowers.append((ceil(Fraction(n, r - 1)), "components"))
        if r == 2:
            if n >= 13 * k - 15:
                lowers.append((n - 2 * k + 2, "two_colour"))
            elif k >= REMARK_MIN_K and n >= thm21k_threshold(k, "remark")[0]:
                lowers.append((n - 2 * k + 2, "two_colour_remark"))
            if k <= 2 and n >= 4 * k - 3:
                lowers.append((n - 2 * k + 2, "two_colour_small_k"))
            if k == 3 and n >= 9:
                lowers.append((n - 4, "two_colour_k3"))
            if n >= 4 * k - 3:
                uppers.append((n - 2 * k + 2, "two_colour"))
        if r >= 3 and k >= 2:
            lowers.extend(r1k_lower_bounds(n, r, k))
        if r == 3 and n >= 480 * k:
            exact = thm31k_guarantee(n, k)
            lowers.append((exact, "three_colour_exact"))
            uppers.append((exact, "three_colour_exact"))
        if r >= 3:
            if is_prime_power(r - 1):
                if n >= r * (k - 1):
                    uppers.append((affine_line_bound(n, r, k), "affine"))
            else:
                t = fallback_order(r)
                if n >= t * (k - 1):
                    uppers.append((affine_line_bound(n, t, k), "affine_fallback"))

    conjecture: Optional[Candidate] = None
    if r >= 3 and n >= 2 * r * (k - 1) + 1 and is_prime_power(r - 1) and (n - r * (k - 1)) % (r - 1) ** 2 == 0:
        conjecture = ((n - k + 1) // (r - 1), "r1k")
    elif r == 3 and n >= 6 * k - 5:
        conjecture = (ceil(Fraction(n - k + 1, 2)), "three_colour")
    elif r == 2 and n >= 4 * k - 3:
        conjecture = (n - 2 * k + 2, "two_colour")

    catalogue = load_theorem_catalogue()
    lower, lower_key = _best(lowers, max)
    upper, upper_key = _best(uppers, min)
    return BoundsRow(
        n=n, r=r, k=k, lower=lower, upper=upper,
        lower_source=_label(catalogue, "lower", lower_key),
        upper_source=_label(catalogue, "upper", upper_key),
        conjectured=conjecture is not None,
        conjectured_value=conjecture[0] if conjecture else None,
        conjectured_source=_label(catalogue, "conjectured", conjecture[1] if conjecture else None),
    )


def bipartite_bounds(m: int, n: int, r: int, k: int) -> BipartiteBoundsRow:
    """Bounds for r-colourings of K_{m,n}"""
    if m < 1 or n < 1 or r < 1 or k < 1:
        raise DomainError(f"need m, n, r, k ⩾ 1, got m={m}, n={n}, r={r}, k={k}")
    lowers: List[Candidate] = []
    uppers: List[Candidate] = []
    if k == 1:
        lowers.append((ceil(Fraction(m + n, r)), "bipartite_components"))
    if m % r == 0 and n % r == 0:
        uppers.append(((m + n) // r, "bipartite_modular"))
    conjecture = (ceil(Fraction(m + n, r)), "bipartite") if r >= 3 and min(m, n) >= r * k else None

    catalogue = load_theorem_catalogue()
    lower, lower_key = _best(lowers, max)
    upper, upper_key = _best(uppers, min)
    return BipartiteBoundsRow(
        m=m, n=n, r=r, k=k, lower=lower, upper=upper,
        lower_source=_label(catalogue, "lower", lower_key),
        upper_source=_label(catalogue, "upper", upper_key),
        conjectured=conjecture is not None,
        conjectured_value=conjecture[0] if conjecture else None,
        conjectured_source=_label(catalogue, "conjectured", conjecture[1] if conjecture else None),
    )
