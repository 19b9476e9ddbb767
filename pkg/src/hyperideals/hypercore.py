"""Finite hypergroupoids and the power-set product they induce.

Elements of an order-``n`` structure are the integers ``0..n-1``.  Subsets of
the carrier are plain ``int`` bit masks (bit ``i`` set means ``i`` is a
member), which keeps products, unions and containment tests to a handful of
machine operations.  ``mask()`` and ``members()`` convert to and from
ordinary collections.

Shared fixtures used throughout the package and its tests:

======  ==========================================  ============
name    table                                        associative
======  ==========================================  ============
``T2``  every cell ``{0,1}``                         yes
``L2``  ``x o y = {x}`` (left projection)            yes
``Z2``  every cell ``{0}``                           yes
``N2``  ``0 o 0 = {1}``, every other cell ``{0}``    no
======  ==========================================  ============
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import EmptyCell, EmptyOperand, NotAssociative, OutOfRange, ZeroOrder

MAX_ORDER = 16

ElementSet = int


def mask(elements: Iterable[int]) -> ElementSet:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(m: ElementSet) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def iter_bits(m: ElementSet):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def format_set(m: ElementSet) -> str:
    return "{" + ",".join(str(e) for e in members(m)) + "}"


@dataclass(frozen=True)
class HyperTable:
    """An order-``n`` hypergroupoid; ``cells[x*n + y]`` is the mask of ``x o y``.

    Build instances through :func:`validate_table` or :meth:`from_masks`; the
    constructor itself does not check anything.
    """

    order: int
    cells: tuple[int, ...]

    @classmethod
    def from_masks(cls, order: int, cells: Iterable[int]) -> "HyperTable":
        cells = tuple(cells)
        if order < 1:
            raise ZeroOrder()
        if len(cells) != order * order:
            raise ValueError(f"expected {order * order} cells, got {len(cells)}")
        full = (1 << order) - 1
        for i, c in enumerate(cells):
            x, y = divmod(i, order)
            if c == 0:
                raise EmptyCell(x, y)
            if c & ~full:
                raise OutOfRange(x, y, (c & ~full).bit_length() - 1)
        return cls(order, cells)

    @property
    def carrier(self) -> ElementSet:
        return (1 << self.order) - 1

    def cell(self, x: int, y: int) -> ElementSet:
        return self.cells[x * self.order + y]

    def rows(self) -> list[list[list[int]]]:
        n = self.order
        return [[members(self.cells[x * n + y]) for y in range(n)] for x in range(n)]

    @cached_property
    def associative(self) -> bool:
        return associativity_violation(self) is None

    def __repr__(self) -> str:
        return f"HyperTable({self.order}, {self.rows()})"


def associativity_violation(H: HyperTable) -> Optional[tuple[int, int, int]]:
    """First triple with ``{x}*(y o z) != (x o y)*{z}``, or ``None``."""
    n, cells = H.order, H.cells
    for x, y, z in product(range(n), repeat=3):
        left = 0
        for w in iter_bits(cells[y * n + z]):
            left |= cells[x * n + w]
        right = 0
        for w in iter_bits(cells[x * n + y]):
            right |= cells[w * n + z]
        if left != right:
            return x, y, z
    return None


def validate_table(raw: Sequence[Sequence[Iterable[int]]]) -> HyperTable:
    """Check a nested ``raw[x][y] = iterable of elements`` table and build it."""
    n = len(raw)
    if n == 0:
        raise ZeroOrder()
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    cells = []
    for x, row in enumerate(raw):
        if len(row) != n:
            raise ValueError(f"row {x} has {len(row)} cells, expected {n}")
        for y, entry in enumerate(row):
            m = 0
            for e in entry:
                if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
                    raise OutOfRange(x, y, e)
                m |= 1 << e
            if m == 0:
                raise EmptyCell(x, y)
            cells.append(m)
    return HyperTable(n, tuple(cells))


def _check_operand(H: HyperTable, A: ElementSet) -> None:
    if A == 0:
        raise EmptyOperand()
    if A >> H.order:
        raise OutOfRange(None, None, A.bit_length() - 1)


def hyper_product(H: HyperTable, x: int, y: int) -> ElementSet:
    return H.cells[x * H.order + y]


def _product(cells: tuple[int, ...], n: int, A: int, B: int) -> int:
    out = 0
    for a in iter_bits(A):
        row = a * n
        for b in iter_bits(B):
            out |= cells[row + b]
    return out


def subset_product(H: HyperTable, A: ElementSet, B: ElementSet) -> ElementSet:
    """``A*B``: the union of ``a o b`` over ``a in A``, ``b in B``."""
    _check_operand(H, A)
    _check_operand(H, B)
    return _product(H.cells, H.order, A, B)


def product_chain(H: HyperTable, parts: Sequence[ElementSet]) -> ElementSet:
    """Left fold of :func:`subset_product` over ``parts``.

    On hypersemigroups the bracketing is irrelevant.  On other tables this is
    ``((A1*A2)*A3)*...`` by convention.
    """
    if not parts:
        raise ValueError("product_chain needs at least one part")
    for p in parts:
        _check_operand(H, p)
    acc = parts[0]
    for p in parts[1:]:
        acc = _product(H.cells, H.order, acc, p)
    return acc


def is_hypersemigroup(H: HyperTable) -> bool:
    return H.associative


def require_hypersemigroup(H: HyperTable) -> None:
    if not H.associative:
        raise NotAssociative()


def decompose_membership(
    H: HyperTable, x: int, A: ElementSet, B: ElementSet
) -> Optional[tuple[int, int]]:
    """Lexicographically smallest ``(a, b)`` in ``A x B`` with ``x in a o b``."""
    _check_operand(H, A)
    _check_operand(H, B)
    bit = 1 << x
    for a in iter_bits(A):
        for b in iter_bits(B):
            if H.cells[a * H.order + b] & bit:
                return a, b
    return None


def relabel(H: HyperTable, perm: Sequence[int]) -> HyperTable:
    """The isomorphic copy in which element ``i`` is renamed ``perm[i]``."""
    n = H.order
    image = [0] * (1 << n)
    for m in range(1, 1 << n):
        image[m] = mask(perm[e] for e in iter_bits(m))
    cells = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            cells[perm[x] * n + perm[y]] = image[H.cells[x * n + y]]
    return HyperTable(n, tuple(cells))


def constant_table(order: int, value: Iterable[int]) -> HyperTable:
    return HyperTable.from_masks(order, [mask(value)] * (order * order))


T2 = HyperTable(2, (0b11, 0b11, 0b11, 0b11))
L2 = HyperTable(2, (0b01, 0b01, 0b10, 0b10))
Z2 = HyperTable(2, (0b01, 0b01, 0b01, 0b01))
N2 = HyperTable(2, (0b10, 0b01, 0b01, 0b01))
FIXTURES = {"T2": T2, "L2": L2, "Z2": Z2, "N2": N2}
