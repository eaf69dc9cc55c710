"""Exact integer formulas for path Turán numbers and path anti-Ramsey numbers.

All functions are pure and work on Python integers, so there is no overflow
to guard against at any input size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import InvalidParameter, OutOfRange, Unsupported


class Branch(str, enum.Enum):
    """Which term of the two-term maximum attains the anti-Ramsey value."""

    CLIQUE = "CLIQUE"
    STAR = "STAR"
    TIE = "TIE"


@dataclass(frozen=True)
class PathSpec:
    k: int
    ell: int = field(init=False)
    epsilon: int = field(init=False)

    def __post_init__(self):
        if self.k < 3:
            raise InvalidParameter(f"path needs k >= 3 vertices, got {self.k}")
        object.__setattr__(self, "ell", (self.k - 1) // 2)
        object.__setattr__(self, "epsilon", 1 if self.k % 2 else 2)

    @property
    def parity(self) -> str:
        return "odd" if self.k % 2 else "even"


@dataclass(frozen=True)
class TuranDecomposition:
    """``n = s*(k-1) + r`` under one of two remainder conventions.

    ``"floor"`` keeps ``0 <= r <= k-2``; ``"ceil"`` keeps
    ``1 <= r <= k-1`` (requires ``n >= 1``).
    """

    n: int
    k: int
    s: int
    r: int
    convention: str

    @classmethod
    def of(cls, n: int, k: int, convention: str = "floor") -> "TuranDecomposition":
        if k < 2:
            raise InvalidParameter(f"k must be >= 2, got {k}")
        if convention == "floor":
            if n < 0:
                raise InvalidParameter(f"n must be >= 0, got {n}")
            s, r = divmod(n, k - 1)
        elif convention == "ceil":
            if n < 1:
                raise InvalidParameter(f"ceil convention needs n >= 1, got {n}")
            s, r = divmod(n - 1, k - 1)
            r += 1
        else:
            raise InvalidParameter(f"unknown convention {convention!r}")
        return cls(n, k, s, r, convention)


@dataclass(frozen=True)
class HParams:
    """Parameters of the three-part graph H(n, k, a)."""

    n: int
    k: int
    a: int

    def __post_init__(self):
        if not (self.n >= self.k >= 2 * self.a >= 0):
            raise InvalidParameter(
                f"H(n,k,a) needs n >= k >= 2a >= 0, got n={self.n} k={self.k} a={self.a}"
            )

    @property
    def size_a(self) -> int:
        return self.a

    @property
    def size_b(self) -> int:
        return self.n - self.k + self.a

    @property
    def size_c(self) -> int:
        return self.k - 2 * self.a


@dataclass(frozen=True)
class FormulaValue:
    value: int
    branch: Branch


def epsilon_of(k: int) -> int:
    return PathSpec(k).epsilon


def h_value(p: HParams | int, k: int | None = None, a: int | None = None) -> int:
    """Edge count of H(n, k, a): C(k-a, 2) + a*(n-k+a).

    Accepts either an :class:`HParams` or the three integers.
    """
    if not isinstance(p, HParams):
        p = HParams(p, k, a)
    return comb(p.k - p.a, 2) + p.a * p.size_b


@lru_cache(maxsize=None)
def turan_path(n: int, k: int) -> int:
    """ex(n, P_k); equals C(n, 2) whenever n <= k-1."""
    if n <= k - 1 and k >= 2 and n >= 0:
        return comb(n, 2)
    d = TuranDecomposition.of(n, k)
    return d.s * comb(k - 1, 2) + comb(d.r, 2)


@lru_cache(maxsize=None)
def turan_path_connected(n: int, k: int) -> int:
    """ex_con(n, P_k) for k >= 4; C(n, 2) whenever n <= k-1."""
    if n < 0 or k < 2:
        raise InvalidParameter(f"need n >= 0 and k >= 2, got n={n} k={k}")
    if n <= k - 1:
        return comb(n, 2)
    if k < 4:
        raise Unsupported(f"no connected P_{k}-free graph on {n} >= {k} vertices")
    s = (k - 2) // 2
    return max(h_value(n, k - 1, 1), h_value(n, k - 1, s))


def _check_ar_range(n: int, k: int) -> None:
    if not (n >= k >= 5):
        raise OutOfRange(f"anti-Ramsey formula needs n >= k >= 5, got n={n} k={k}")


def _tag(clique: int, star: int) -> FormulaValue:
    if clique > star:
        return FormulaValue(clique, Branch.CLIQUE)
    if star > clique:
        return FormulaValue(star, Branch.STAR)
    return FormulaValue(clique, Branch.TIE)


def ar_value(n: int, k: int) -> FormulaValue:
    """max{h(k,k-1,1) - 1, h(n,k-1,ell-1) - i} with i = 0 for odd k, 1 for even k."""
    _check_ar_range(n, k)
    ell = (k - 1) // 2
    i = 0 if k % 2 else 1
    return _tag(h_value(k, k - 1, 1) - 1, h_value(n, k - 1, ell - 1) - i)


def anti_ramsey(n: int, k: int) -> FormulaValue:
    """AR(n, P_k), evaluated from the two construction counts directly."""
    _check_ar_range(n, k)
    spec = PathSpec(k)
    ell = spec.ell
    clique = comb(k - 2, 2) + 1
    star = comb(ell - 1, 2) + (ell - 1) * (n - ell + 1) + spec.epsilon
    return _tag(clique, star)


def attaining_branch(n: int, k: int) -> Branch:
    return ar_value(n, k).branch


def clique_threshold(k: int) -> float:
    """Largest n (possibly fractional) where the clique term still attains the max.

    (5*ell - 2)/2 for odd k and (5*ell + 2)/2 for even k.
    """
    ell = PathSpec(k).ell
    return (5 * ell - 2) / 2 if k % 2 else (5 * ell + 2) / 2
