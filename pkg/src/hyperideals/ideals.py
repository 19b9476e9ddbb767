"""Crisp substructures: subsemigroups, one- and two-sided ideals, interior ideals."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .hypercore import (
    ElementSet,
    HyperTable,
    _check_operand,
    _product,
    iter_bits,
    require_hypersemigroup,
)


class IdealKind(enum.Enum):
    SUBSEMIGROUP = "subsemigroup"
    LEFT_IDEAL = "left"
    RIGHT_IDEAL = "right"
    IDEAL = "ideal"
    INTERIOR_IDEAL = "interior"
    SUBIDEMPOTENT_INTERIOR_IDEAL = "subidempotent-interior"

    @property
    def needs_associativity(self) -> bool:
        return self in (IdealKind.INTERIOR_IDEAL, IdealKind.SUBIDEMPOTENT_INTERIOR_IDEAL)


@dataclass(frozen=True)
class Witness:
    """``element`` lies in the product of ``factors`` but outside the tested set.

    ``factors`` are single elements multiplied left to right, e.g. ``(x, a, y)``
    means ``element in (x o a) * {y}``.
    """

    element: int
    factors: tuple[int, ...]

    def recheck(self, H: HyperTable, A: ElementSet) -> bool:
        """True iff this witness still certifies a violation for ``A``."""
        if A >> self.element & 1:
            return False
        acc = 1 << self.factors[0]
        for f in self.factors[1:]:
            acc = _product(H.cells, H.order, acc, 1 << f)
        return bool(acc >> self.element & 1)


def _outside(H: HyperTable, A: ElementSet, left: ElementSet, right: ElementSet) -> Optional[Witness]:
    n, cells = H.order, H.cells
    for a in iter_bits(left):
        for b in iter_bits(right):
            bad = cells[a * n + b] & ~A
            if bad:
                return Witness((bad & -bad).bit_length() - 1, (a, b))
    return None


def _interior_outside(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    n, cells = H.order, H.cells
    for x in range(n):
        for a in iter_bits(A):
            xa = cells[x * n + a]
            for y in range(n):
                bad = _product(cells, n, xa, 1 << y) & ~A
                if bad:
                    return Witness((bad & -bad).bit_length() - 1, (x, a, y))
    return None


def subsemigroup_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    _check_operand(H, A)
    return _outside(H, A, A, A)


def left_ideal_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    _check_operand(H, A)
    return _outside(H, A, H.carrier, A)


def right_ideal_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    _check_operand(H, A)
    return _outside(H, A, A, H.carrier)


def ideal_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    return left_ideal_witness(H, A) or right_ideal_witness(H, A)


def interior_ideal_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    _check_operand(H, A)
    require_hypersemigroup(H)
    return _interior_outside(H, A)


def subidempotent_interior_ideal_witness(H: HyperTable, A: ElementSet) -> Optional[Witness]:
    return interior_ideal_witness(H, A) or subsemigroup_witness(H, A)


def is_subsemigroup(H: HyperTable, A: ElementSet) -> bool:
    _check_operand(H, A)
    return _product(H.cells, H.order, A, A) & ~A == 0


def is_left_ideal(H: HyperTable, A: ElementSet) -> bool:
    _check_operand(H, A)
    return _product(H.cells, H.order, H.carrier, A) & ~A == 0


def is_right_ideal(H: HyperTable, A: ElementSet) -> bool:
    _check_operand(H, A)
    return _product(H.cells, H.order, A, H.carrier) & ~A == 0


def is_ideal(H: HyperTable, A: ElementSet) -> bool:
    return is_left_ideal(H, A) and is_right_ideal(H, A)


def is_interior_ideal(H: HyperTable, A: ElementSet) -> bool:
    _check_operand(H, A)
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    return _product(cells, n, _product(cells, n, full, A), full) & ~A == 0


def is_subidempotent_interior_ideal(H: HyperTable, A: ElementSet) -> bool:
    return is_interior_ideal(H, A) and is_subsemigroup(H, A)


PREDICATES = {
    IdealKind.SUBSEMIGROUP: is_subsemigroup,
    IdealKind.LEFT_IDEAL: is_left_ideal,
    IdealKind.RIGHT_IDEAL: is_right_ideal,
    IdealKind.IDEAL: is_ideal,
    IdealKind.INTERIOR_IDEAL: is_interior_ideal,
    IdealKind.SUBIDEMPOTENT_INTERIOR_IDEAL: is_subidempotent_interior_ideal,
}

WITNESSES = {
    IdealKind.SUBSEMIGROUP: subsemigroup_witness,
    IdealKind.LEFT_IDEAL: left_ideal_witness,
    IdealKind.RIGHT_IDEAL: right_ideal_witness,
    IdealKind.IDEAL: ideal_witness,
    IdealKind.INTERIOR_IDEAL: interior_ideal_witness,
    IdealKind.SUBIDEMPOTENT_INTERIOR_IDEAL: subidempotent_interior_ideal_witness,
}


@dataclass
class PropertyReport:
    subset: ElementSet
    verdicts: dict[IdealKind, bool] = field(default_factory=dict)
    witnesses: dict[IdealKind, Witness] = field(default_factory=dict)


def property_report(H: HyperTable, A: ElementSet) -> PropertyReport:
    """Evaluate every applicable kind for ``A``.

    Interior kinds are skipped (absent from ``verdicts``) on non-associative
    tables.
    """
    report = PropertyReport(A)
    for kind, find in WITNESSES.items():
        if kind.needs_associativity and not H.associative:
            continue
        w = find(H, A)
        report.verdicts[kind] = w is None
        if w is not None:
            report.witnesses[kind] = w
    return report


def list_substructures(H: HyperTable, kind: IdealKind) -> list[ElementSet]:
    """Every nonempty subset satisfying ``kind``, in ascending mask order."""
    if kind.needs_associativity:
        require_hypersemigroup(H)
    pred = PREDICATES[kind]
    return [A for A in range(1, H.carrier + 1) if pred(H, A)]


def proper_ideal(H: HyperTable) -> Optional[ElementSet]:
    """Smallest-mask ideal different from the whole carrier, if any."""
    for A in range(1, H.carrier):
        if is_ideal(H, A):
            return A
    return None


def principal_sandwich(H: HyperTable, a: int) -> ElementSet:
    """``H * {a} * H``."""
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    return _product(cells, n, _product(cells, n, full, 1 << a), full)


def is_simple(H: HyperTable) -> bool:
    return proper_ideal(H) is None


def is_simple_elementwise(H: HyperTable) -> bool:
    full = H.carrier
    return all(principal_sandwich(H, a) == full for a in range(H.order))
