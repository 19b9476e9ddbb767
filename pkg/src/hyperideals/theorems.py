"""Executable forms of the statements the harness verifies.

Every check takes a table and returns a :class:`Verdict`.  ``applicable`` says
whether the statement's hypothesis held (a conditional statement on a
structure outside its class passes vacuously); ``violation`` names the failed
clause, or is ``None``.
"""
from __future__ import annotations

import enum
from functools import cached_property
from typing import Callable, NamedTuple, Optional

from . import classes, fuzzy, ideals
from .fuzzy import _interior_violation, _left_violation, _max_violation, _right_violation
from .hypercore import HyperTable, _product, decompose_membership, iter_bits


class TheoremId(str, enum.Enum):
    P1_1 = "P1_1"
    P2_3 = "P2_3"
    P2_4 = "P2_4"
    P2_6 = "P2_6"
    P2_7 = "P2_7"
    P2_8 = "P2_8"
    T2_9 = "T2_9"
    P2_11 = "P2_11"
    P2_12 = "P2_12"
    C2_13 = "C2_13"
    P2_14 = "P2_14"
    T2_15 = "T2_15"
    L2_17 = "L2_17"
    P2_20 = "P2_20"
    P2_21 = "P2_21"
    P2_22 = "P2_22"
    T2_23 = "T2_23"
    T2_24 = "T2_24"
    T2_25 = "T2_25"

    def __str__(self):
        return self.value


HYPERGROUPOID_SCOPE = frozenset(
    {TheoremId.P1_1, TheoremId.P2_20, TheoremId.P2_21, TheoremId.P2_22, TheoremId.T2_23}
)

DESCRIPTIONS = {
    TheoremId.P1_1: "x in A*B iff x in a o b for some a in A, b in B; a o b is inside A*B",
    TheoremId.P2_3: "A is an interior ideal iff its characteristic function is a fuzzy interior ideal",
    TheoremId.P2_4: "every fuzzy ideal is a fuzzy interior ideal",
    TheoremId.P2_6: "regular = elementwise sandwich form = A inside A*H*A",
    TheoremId.P2_7: "regular: interior ideals are subsemigroups",
    TheoremId.P2_8: "regular: fuzzy interior ideals are fuzzy ideals",
    TheoremId.T2_9: "regular: fuzzy ideals and fuzzy interior ideals coincide",
    TheoremId.P2_11: "intra-regular = H*a*a*H form = A inside H*A*A*H",
    TheoremId.P2_12: "intra-regular: interior ideals are subsemigroups",
    TheoremId.C2_13: "regular or intra-regular: interior ideals are subidempotent",
    TheoremId.P2_14: "intra-regular: fuzzy interior ideals are fuzzy ideals",
    TheoremId.T2_15: "intra-regular: fuzzy ideals and fuzzy interior ideals coincide",
    TheoremId.L2_17: "simple iff H = H*a*H for every a",
    TheoremId.P2_20: "fuzzy right ideal: every level set is a right ideal",
    TheoremId.P2_21: "fuzzy left ideal: every level set is a left ideal",
    TheoremId.P2_22: "fuzzy ideal: every level set is an ideal",
    TheoremId.T2_23: "simple iff fuzzy simple",
    TheoremId.T2_24: "simple iff every fuzzy interior ideal is constant",
    TheoremId.T2_25: "simple = sandwich form = fuzzy simple = fuzzy interior simple",
}


def parse_theorem(name: str) -> TheoremId:
    from .errors import UnknownTheorem

    try:
        return TheoremId(name.strip().upper())
    except ValueError:
        raise UnknownTheorem(name) from None


class Verdict(NamedTuple):
    applicable: bool
    violation: Optional[str]


PASS = Verdict(True, None)
VACUOUS = Verdict(False, None)


class Facts:
    """Lazily computed, shared per-structure facts."""

    def __init__(self, H: HyperTable):
        self.H = H

    @cached_property
    def simple(self) -> bool:
        return ideals.is_simple(self.H)

    @cached_property
    def simple_elementwise(self) -> bool:
        return ideals.is_simple_elementwise(self.H)

    @cached_property
    def fuzzy_simple(self) -> bool:
        return fuzzy.is_fuzzy_simple(self.H)

    @cached_property
    def fuzzy_interior_simple(self) -> bool:
        return fuzzy.is_fuzzy_interior_simple(self.H)

    @cached_property
    def regular(self) -> bool:
        return classes.is_regular(self.H)

    @cached_property
    def intra_regular(self) -> bool:
        return classes.is_intra_regular(self.H)

    @cached_property
    def profiles(self) -> tuple:
        return fuzzy.all_profile_grades(self.H.order)

    @cached_property
    def fuzzy_ideal_flags(self) -> list[bool]:
        return [_max_violation(self.H, g) is None for g in self.profiles]

    @cached_property
    def fuzzy_interior_flags(self) -> list[bool]:
        return [_interior_violation(self.H, g) is None for g in self.profiles]

    @cached_property
    def interior_ideals(self) -> list[int]:
        return ideals.list_substructures(self.H, ideals.IdealKind.INTERIOR_IDEAL)


def _fmt_grades(g) -> str:
    return "[" + ",".join(f"{x:g}" for x in g) + "]"


def check_p1_1(F: Facts) -> Verdict:
    H = F.H
    n, cells, full = H.order, H.cells, H.carrier
    for A in range(1, full + 1):
        for B in range(1, full + 1):
            P = _product(cells, n, A, B)
            for x in range(n):
                d = decompose_membership(H, x, A, B)
                if (d is not None) != bool(P >> x & 1):
                    return Verdict(True, f"(1) x={x} A={A} B={B}")
                if d is not None:
                    a, b = d
                    if not (A >> a & 1 and B >> b & 1 and cells[a * n + b] >> x & 1):
                        return Verdict(True, f"(1) bad decomposition x={x} A={A} B={B}")
            for a in iter_bits(A):
                for b in iter_bits(B):
                    if cells[a * n + b] & ~P:
                        return Verdict(True, f"(2) a={a} b={b} A={A} B={B}")
    return PASS


def check_p2_3(F: Facts) -> Verdict:
    H = F.H
    interior = set(F.interior_ideals)
    for A in range(1, H.carrier + 1):
        chi = fuzzy.characteristic(A, H.order).grades
        if (A in interior) != (_interior_violation(H, chi) is None):
            return Verdict(True, f"A={A}")
    return PASS


def check_p2_4(F: Facts) -> Verdict:
    for g, ideal, interior in zip(F.profiles, F.fuzzy_ideal_flags, F.fuzzy_interior_flags):
        if ideal and not interior:
            return Verdict(True, f"f={_fmt_grades(g)}")
    return PASS


def check_p2_6(F: Facts) -> Verdict:
    H = F.H
    w = classes.regular_witnesses(H)
    if not w.recheck(H):
        return Verdict(True, "witness recheck")
    forms = (w.holds, classes.is_regular_sandwich(H), classes.is_regular_subsets(H))
    if len(set(forms)) != 1:
        return Verdict(True, "forms disagree (%s,%s,%s)" % forms)
    return PASS


def check_p2_11(F: Facts) -> Verdict:
    H = F.H
    w = classes.intra_regular_witnesses(H)
    if not w.recheck(H):
        return Verdict(True, "witness recheck")
    forms = (w.holds, classes.is_intra_regular_sandwich(H), classes.is_intra_regular_subsets(H))
    if len(set(forms)) != 1:
        return Verdict(True, "forms disagree (%s,%s,%s)" % forms)
    return PASS


def _interior_are_subsemigroups(F: Facts, applicable: bool) -> Verdict:
    if not applicable:
        return VACUOUS
    for A in F.interior_ideals:
        if not ideals.is_subsemigroup(F.H, A):
            return Verdict(True, f"A={A}")
    return PASS


def _interior_implies_ideal(F: Facts, applicable: bool) -> Verdict:
    if not applicable:
        return VACUOUS
    for g, ideal, interior in zip(F.profiles, F.fuzzy_ideal_flags, F.fuzzy_interior_flags):
        if interior and not ideal:
            return Verdict(True, f"f={_fmt_grades(g)}")
    return PASS


def _coincide(F: Facts, applicable: bool) -> Verdict:
    if not applicable:
        return VACUOUS
    for g, ideal, interior in zip(F.profiles, F.fuzzy_ideal_flags, F.fuzzy_interior_flags):
        if ideal != interior:
            return Verdict(True, f"f={_fmt_grades(g)}")
    return PASS


def check_c2_13(F: Facts) -> Verdict:
    if not (F.regular or F.intra_regular):
        return VACUOUS
    kind = ideals.IdealKind.SUBIDEMPOTENT_INTERIOR_IDEAL
    if F.interior_ideals != ideals.list_substructures(F.H, kind):
        return Verdict(True, "lists differ")
    return PASS


def check_l2_17(F: Facts) -> Verdict:
    if F.simple != F.simple_elementwise:
        return Verdict(True, f"simple={F.simple} elementwise={F.simple_elementwise}")
    return PASS


def _level_sets(F: Facts, violation, ideal_pred, label: str) -> Verdict:
    H = F.H
    for g in F.profiles:
        if violation(H, g) is not None:
            continue
        for a in range(H.order):
            I = fuzzy.level_set(g, a).members
            if not ideal_pred(H, I):
                return Verdict(True, f"{label} f={_fmt_grades(g)} a={a}")
    return PASS


def _either_violation(H, g):
    return _left_violation(H, g) or _right_violation(H, g)


def check_t2_23(F: Facts) -> Verdict:
    if F.simple != F.fuzzy_simple:
        return Verdict(True, f"simple={F.simple} fuzzy_simple={F.fuzzy_simple}")
    proper = ideals.proper_ideal(F.H)
    if proper is not None:
        chi = fuzzy.characteristic(proper, F.H.order).grades
        if _max_violation(F.H, chi) is not None:
            return Verdict(True, f"characteristic function of ideal {proper} is not a fuzzy ideal")
    return PASS


def check_t2_24(F: Facts) -> Verdict:
    if F.simple != F.fuzzy_interior_simple:
        return Verdict(True, f"simple={F.simple} fuzzy_interior_simple={F.fuzzy_interior_simple}")
    return PASS


def check_t2_25(F: Facts) -> Verdict:
    forms = (F.simple, F.simple_elementwise, F.fuzzy_simple, F.fuzzy_interior_simple)
    if len(set(forms)) != 1:
        return Verdict(True, "forms disagree (%s,%s,%s,%s)" % forms)
    return PASS


CHECKS: dict[TheoremId, Callable[[Facts], Verdict]] = {
    TheoremId.P1_1: check_p1_1,
    TheoremId.P2_3: check_p2_3,
    TheoremId.P2_4: check_p2_4,
    TheoremId.P2_6: check_p2_6,
    TheoremId.P2_7: lambda F: _interior_are_subsemigroups(F, F.regular),
    TheoremId.P2_8: lambda F: _interior_implies_ideal(F, F.regular),
    TheoremId.T2_9: lambda F: _coincide(F, F.regular),
    TheoremId.P2_11: check_p2_11,
    TheoremId.P2_12: lambda F: _interior_are_subsemigroups(F, F.intra_regular),
    TheoremId.C2_13: check_c2_13,
    TheoremId.P2_14: lambda F: _interior_implies_ideal(F, F.intra_regular),
    TheoremId.T2_15: lambda F: _coincide(F, F.intra_regular),
    TheoremId.L2_17: check_l2_17,
    TheoremId.P2_20: lambda F: _level_sets(F, _right_violation, ideals.is_right_ideal, "right"),
    TheoremId.P2_21: lambda F: _level_sets(F, _left_violation, ideals.is_left_ideal, "left"),
    TheoremId.P2_22: lambda F: _level_sets(F, _either_violation, ideals.is_ideal, "two-sided"),
    TheoremId.T2_23: check_t2_23,
    TheoremId.T2_24: check_t2_24,
    TheoremId.T2_25: check_t2_25,
}


def run_check(theorem: TheoremId, H: HyperTable, facts: Optional[Facts] = None) -> Verdict:
    """Evaluate one statement on ``H``; hypersemigroup-scoped ones need associativity."""
    if theorem not in HYPERGROUPOID_SCOPE and not H.associative:
        from .errors import NotAssociative

        raise NotAssociative()
    return CHECKS[theorem](facts or Facts(H))
