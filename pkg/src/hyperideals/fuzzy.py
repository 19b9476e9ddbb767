"""Fuzzy subsets and fuzzy ideals of finite hypergroupoids.

All predicates here are conjunctions of comparisons ``f(u) >= f(v)``, so they
depend only on the weak order the grades induce on the carrier.  A rank
profile is the canonical representative of such a weak order, and quantifying
over the finitely many rank profiles of an order-``n`` carrier is the same as
quantifying over every map ``H -> [0,1]``.  That is what makes
:func:`is_fuzzy_simple` and :func:`is_fuzzy_interior_simple` exact.

Grades are compared as given, with no tolerance.  Use ``Fraction`` when exact
decimal input matters.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from numbers import Real
from typing import Optional, Sequence, Union

from .errors import (
    EmptyOperand,
    InternalInconsistency,
    LengthMismatch,
    OrderTooLarge,
    OutOfRange,
    ZeroOrder,
)
from .hypercore import ElementSet, HyperTable, MAX_ORDER, _product, iter_bits, require_hypersemigroup


@dataclass(frozen=True)
class FuzzySubset:
    grades: tuple

    def __post_init__(self):
        object.__setattr__(self, "grades", tuple(self.grades))
        for g in self.grades:
            if not isinstance(g, Real) or not 0 <= g <= 1:
                raise ValueError(f"grade {g!r} is not a real number in [0,1]")

    def __len__(self):
        return len(self.grades)

    def __getitem__(self, i):
        return self.grades[i]

    def is_constant(self) -> bool:
        return max(self.grades) == min(self.grades)


FuzzyLike = Union[FuzzySubset, Sequence[Real]]


@dataclass(frozen=True)
class LevelSetResult:
    base: int
    members: ElementSet


def _grades(H: HyperTable, f: FuzzyLike) -> tuple:
    if not isinstance(f, FuzzySubset):
        f = FuzzySubset(f)
    if len(f.grades) != H.order:
        raise LengthMismatch(len(f.grades), H.order)
    return f.grades


def characteristic(A: ElementSet, order: int) -> FuzzySubset:
    if A == 0:
        raise EmptyOperand()
    if A >> order:
        raise OutOfRange(None, None, A.bit_length() - 1)
    return FuzzySubset(tuple(A >> x & 1 for x in range(order)))


# Violations are reported as (x, y, u): u in x o y breaks the inequality.

def _left_violation(H: HyperTable, g) -> Optional[tuple]:
    n, cells = H.order, H.cells
    for x in range(n):
        for y in range(n):
            for u in iter_bits(cells[x * n + y]):
                if g[u] < g[y]:
                    return x, y, u
    return None


def _right_violation(H: HyperTable, g) -> Optional[tuple]:
    n, cells = H.order, H.cells
    for x in range(n):
        for y in range(n):
            for u in iter_bits(cells[x * n + y]):
                if g[u] < g[x]:
                    return x, y, u
    return None


def _max_violation(H: HyperTable, g) -> Optional[tuple]:
    n, cells = H.order, H.cells
    for x in range(n):
        for y in range(n):
            top = max(g[x], g[y])
            for u in iter_bits(cells[x * n + y]):
                if g[u] < top:
                    return x, y, u
    return None


def _interior_violation(H: HyperTable, g) -> Optional[tuple]:
    """(x, a, y, u): u in (x o a) * {y} but f(u) < f(a)."""
    n, cells = H.order, H.cells
    for x in range(n):
        for a in range(n):
            xa = cells[x * n + a]
            for y in range(n):
                for u in iter_bits(_product(cells, n, xa, 1 << y)):
                    if g[u] < g[a]:
                        return x, a, y, u
    return None


def fuzzy_left_violation(H: HyperTable, f: FuzzyLike) -> Optional[tuple]:
    return _left_violation(H, _grades(H, f))


def fuzzy_right_violation(H: HyperTable, f: FuzzyLike) -> Optional[tuple]:
    return _right_violation(H, _grades(H, f))


def fuzzy_ideal_violation(H: HyperTable, f: FuzzyLike) -> Optional[tuple]:
    g = _grades(H, f)
    split = _left_violation(H, g) or _right_violation(H, g)
    joint = _max_violation(H, g)
    if (split is None) != (joint is None):
        raise InternalInconsistency(
            f"left/right form says {split is None}, max form says {joint is None}"
        )
    return joint


def fuzzy_interior_violation(H: HyperTable, f: FuzzyLike) -> Optional[tuple]:
    require_hypersemigroup(H)
    return _interior_violation(H, _grades(H, f))


def is_fuzzy_left_ideal(H: HyperTable, f: FuzzyLike) -> bool:
    return fuzzy_left_violation(H, f) is None


def is_fuzzy_right_ideal(H: HyperTable, f: FuzzyLike) -> bool:
    return fuzzy_right_violation(H, f) is None


def is_fuzzy_ideal(H: HyperTable, f: FuzzyLike) -> bool:
    return fuzzy_ideal_violation(H, f) is None


def is_fuzzy_interior_ideal(H: HyperTable, f: FuzzyLike) -> bool:
    return fuzzy_interior_violation(H, f) is None


def level_set(f: FuzzyLike, a: int) -> LevelSetResult:
    grades = f.grades if isinstance(f, FuzzySubset) else FuzzySubset(f).grades
    if not 0 <= a < len(grades):
        raise OutOfRange(None, None, a)
    floor = grades[a]
    m = 0
    for b, g in enumerate(grades):
        if g >= floor:
            m |= 1 << b
    return LevelSetResult(a, m)


def enumerate_rank_profiles(order: int) -> list[tuple[int, ...]]:
    """Every surjection ``{0..n-1} -> {0..k-1}``, ``k = 1..n``, in lexicographic order."""
    if order < 1:
        raise ZeroOrder()
    if order > MAX_ORDER:
        raise OrderTooLarge(order, MAX_ORDER)
    return list(_rank_profiles(order))


@lru_cache(maxsize=None)
def _rank_profiles(order: int) -> tuple[tuple[int, ...], ...]:
    out = []
    ranks = [0] * order

    def fill(i: int, used: int, top: int) -> None:
        missing = top + 1 - bin(used).count("1") if used else 0
        if missing > order - i:
            return
        if i == order:
            out.append(tuple(ranks))
            return
        for r in range(order):
            ranks[i] = r
            fill(i + 1, used | 1 << r, max(top, r))

    fill(0, 0, -1)
    return tuple(out)


def profile_grades(ranks: Sequence[int]) -> FuzzySubset:
    """Rescale a rank profile into ``[0,1]``; the constant profile maps to 0."""
    k = max(ranks)
    if k == 0:
        return FuzzySubset((0,) * len(ranks))
    return FuzzySubset(tuple(r / k for r in ranks))


@lru_cache(maxsize=None)
def nonconstant_profile_grades(order: int) -> tuple[tuple, ...]:
    return tuple(profile_grades(r).grades for r in _rank_profiles(order) if max(r) > 0)


@lru_cache(maxsize=None)
def all_profile_grades(order: int) -> tuple[tuple, ...]:
    return tuple(profile_grades(r).grades for r in _rank_profiles(order))


def nonconstant_fuzzy_ideal(H: HyperTable) -> Optional[FuzzySubset]:
    for g in nonconstant_profile_grades(H.order):
        if _max_violation(H, g) is None:
            return FuzzySubset(g)
    return None


def nonconstant_fuzzy_interior_ideal(H: HyperTable) -> Optional[FuzzySubset]:
    require_hypersemigroup(H)
    for g in nonconstant_profile_grades(H.order):
        if _interior_violation(H, g) is None:
            return FuzzySubset(g)
    return None


def is_fuzzy_simple(H: HyperTable) -> bool:
    return nonconstant_fuzzy_ideal(H) is None


def is_fuzzy_interior_simple(H: HyperTable) -> bool:
    return nonconstant_fuzzy_interior_ideal(H) is None
