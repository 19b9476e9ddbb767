"""Regular and intra-regular hypersemigroups.

Each class has an elementwise form that makes sense on any hypergroupoid, plus
a sandwich form and an all-subsets form that need associativity to be
unambiguous.  On hypersemigroups all three agree; the harness in
:mod:`hyperideals.theorems` checks that.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .hypercore import HyperTable, _product, require_hypersemigroup


@dataclass(frozen=True)
class RegularityWitness:
    """Per element, the smallest witness found (``None`` where there is none).

    Entries are ``x`` for regularity and ``(x, y)`` for intra-regularity.
    """

    kind: str
    witnesses: tuple[Optional[Union[int, tuple[int, int]]], ...]

    @property
    def holds(self) -> bool:
        return all(w is not None for w in self.witnesses)

    def failing(self) -> list[int]:
        return [a for a, w in enumerate(self.witnesses) if w is None]

    def recheck(self, H: HyperTable) -> bool:
        n, cells = H.order, H.cells
        for a, w in enumerate(self.witnesses):
            if w is None:
                continue
            if self.kind == "regular":
                prod = _product(cells, n, 1 << a, cells[w * n + a])
            else:
                x, y = w
                prod = _product(cells, n, cells[x * n + a], cells[a * n + y])
            if not prod >> a & 1:
                return False
        return True


def regular_witnesses(H: HyperTable) -> RegularityWitness:
    n, cells = H.order, H.cells
    found = []
    for a in range(n):
        bit = 1 << a
        found.append(
            next((x for x in range(n) if _product(cells, n, bit, cells[x * n + a]) & bit), None)
        )
    return RegularityWitness("regular", tuple(found))


def intra_regular_witnesses(H: HyperTable) -> RegularityWitness:
    n, cells = H.order, H.cells
    found = []
    for a in range(n):
        bit = 1 << a
        hit = None
        for x in range(n):
            xa = cells[x * n + a]
            for y in range(n):
                if _product(cells, n, xa, cells[a * n + y]) & bit:
                    hit = (x, y)
                    break
            if hit:
                break
        found.append(hit)
    return RegularityWitness("intra-regular", tuple(found))


def is_regular(H: HyperTable) -> bool:
    return regular_witnesses(H).holds


def is_intra_regular(H: HyperTable) -> bool:
    return intra_regular_witnesses(H).holds


def is_regular_sandwich(H: HyperTable) -> bool:
    """Every ``a`` lies in ``{a}*{x}*{a}`` for some ``x``."""
    require_hypersemigroup(H)
    n, cells = H.order, H.cells
    for a in range(n):
        bit = 1 << a
        if not any(_product(cells, n, cells[a * n + x], bit) & bit for x in range(n)):
            return False
    return True


def is_regular_subsets(H: HyperTable) -> bool:
    """``A`` is contained in ``A*H*A`` for every nonempty ``A``."""
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    for A in range(1, full + 1):
        if A & ~_product(cells, n, _product(cells, n, A, full), A):
            return False
    return True


def is_sandwich_covering(H: HyperTable) -> bool:
    """``A`` is contained in ``H*A*H`` for every nonempty ``A``.

    Not a characterization of regularity in general; kept so the harness can
    measure where it agrees with :func:`is_regular`.
    """
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    for A in range(1, full + 1):
        if A & ~_product(cells, n, _product(cells, n, full, A), full):
            return False
    return True


def is_intra_regular_sandwich(H: HyperTable) -> bool:
    """Every ``a`` lies in ``H*{a}*{a}*H``."""
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    for a in range(n):
        bit = 1 << a
        chain = _product(cells, n, _product(cells, n, _product(cells, n, full, bit), bit), full)
        if not chain & bit:
            return False
    return True


def is_intra_regular_subsets(H: HyperTable) -> bool:
    """``A`` is contained in ``H*A*A*H`` for every nonempty ``A``."""
    require_hypersemigroup(H)
    n, cells, full = H.order, H.cells, H.carrier
    for A in range(1, full + 1):
        chain = _product(cells, n, _product(cells, n, _product(cells, n, full, A), A), full)
        if A & ~chain:
            return False
    return True
