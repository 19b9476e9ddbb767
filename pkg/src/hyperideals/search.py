"""Exhaustive and sampled search over small hypergroupoids.

Enumeration order is fixed: cells are visited row-major, ``(0,0), (0,1), ...``,
and each cell runs through the nonempty masks ``1 .. 2**n - 1`` in increasing
order.  Hypersemigroups come out in the same relative order as the full
hypergroupoid stream.

Sampling uses ``random.Random(seed)`` (MT19937).  A random table is drawn cell
by cell, row-major, each cell being ``1 + rng.randrange(2**n - 1)``.  Random
hypersemigroups (order <= 3 only) are drawn uniformly from the exhaustive
list with ``rng.randrange(len(list))``.

Parallel runs split the space by fixing a prefix of cells.  Each worker
returns a partial result, and the partials are merged in prefix order with
counterexamples re-sorted.  The output therefore does not depend on the
worker count.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence, Union

from . import classes, fuzzy, ideals
from .document import serialize_structure
from .errors import OrderMismatch, OrderTooLarge, UnknownPredicate, ZeroOrder
from .hypercore import HyperTable, relabel
from .theorems import HYPERGROUPOID_SCOPE, CHECKS, Facts, TheoremId, parse_theorem

EXHAUSTIVE_LIMIT = 3
MAX_COUNTEREXAMPLES = 50
WORKERS_ENV = "HYPERIDEALS_WORKERS"


@dataclass(frozen=True)
class Sample:
    count: int
    seed: int


Mode = Union[str, Sample]


def _check_exhaustive(order: int) -> None:
    if order < 1:
        raise ZeroOrder()
    if order > EXHAUSTIVE_LIMIT:
        raise OrderTooLarge(order, EXHAUSTIVE_LIMIT)


# -- enumeration ------------------------------------------------------------

def enumerate_hypergroupoids(order: int, prefix: Sequence[int] = ()) -> Iterator[HyperTable]:
    _check_exhaustive(order)
    prefix = tuple(prefix)
    for rest in product(range(1, 1 << order), repeat=order * order - len(prefix)):
        yield HyperTable(order, prefix + rest)


@lru_cache(maxsize=None)
def _triples_by_cell(n: int) -> tuple:
    # Triples whose last needed cell (row-major) can be cell c.
    out = []
    for c in range(n * n):
        i, j = divmod(c, n)
        out.append(tuple(
            (x, y, z)
            for x, y, z in product(range(n), repeat=3)
            if x * n + y == c or y * n + z == c or x == i or z == j
        ))
    return tuple(out)


def enumerate_hypersemigroups(order: int, prefix: Sequence[int] = ()) -> Iterator[HyperTable]:
    """Associative tables only, pruning partial tables as soon as a triple fails.

    A triple ``(x,y,z)`` is tested once every cell it reads is filled: cells
    ``x o y`` and ``y o z``, then ``x o w`` for ``w`` in ``y o z`` and
    ``w o z`` for ``w`` in ``x o y``.  It is tested exactly once, at the
    cell that completes that set.
    """
    _check_exhaustive(order)
    n = order
    N = n * n
    top = 1 << n
    T = [0] * N
    high = [0] + [m.bit_length() - 1 for m in range(1, top)]
    by_cell = _triples_by_cell(n)

    def ok(c: int) -> bool:
        for x, y, z in by_cell[c]:
            a = x * n + y
            b = y * n + z
            if a > c or b > c:
                continue
            xy, yz = T[a], T[b]
            if max(a, b, x * n + high[yz], high[xy] * n + z) != c:
                continue
            left = 0
            w = yz
            while w:
                low = w & -w
                left |= T[x * n + low.bit_length() - 1]
                w ^= low
            right = 0
            w = xy
            while w:
                low = w & -w
                right |= T[(low.bit_length() - 1) * n + z]
                w ^= low
            if left != right:
                return False
        return True

    k = len(prefix)
    for c, v in enumerate(prefix):
        T[c] = v
        if not ok(c):
            return
    if k == N:
        yield HyperTable(n, tuple(T))
        return
    c = k
    while c >= k:
        T[c] += 1
        if T[c] == top:
            T[c] = 0
            c -= 1
            continue
        if ok(c):
            if c == N - 1:
                yield HyperTable(n, tuple(T))
            else:
                c += 1


@lru_cache(maxsize=None)
def all_hypersemigroups(order: int) -> tuple[HyperTable, ...]:
    return tuple(enumerate_hypersemigroups(order))


# -- isomorphism --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically least row-major mask tuple over all relabelings."""

    order: int
    cells: tuple[int, ...]

    def table(self) -> HyperTable:
        return HyperTable(self.order, self.cells)


def canonical_form(H: HyperTable) -> CanonicalForm:
    best = min(relabel(H, p).cells for p in permutations(range(H.order)))
    return CanonicalForm(H.order, best)


def are_isomorphic(H1: HyperTable, H2: HyperTable) -> bool:
    if H1.order != H2.order:
        raise OrderMismatch(H1.order, H2.order)
    return canonical_form(H1) == canonical_form(H2)


def is_canonical(H: HyperTable) -> bool:
    return canonical_form(H).cells == H.cells


# -- sampling ---------------------------------------------------------------

def random_table(order: int, rng: random.Random) -> HyperTable:
    span = (1 << order) - 1
    return HyperTable(order, tuple(1 + rng.randrange(span) for _ in range(order * order)))


def sample_hypergroupoids(order: int, count: int, seed: int) -> list[HyperTable]:
    if order < 1:
        raise ZeroOrder()
    rng = random.Random(seed)
    return [random_table(order, rng) for _ in range(count)]


def sample_hypersemigroups(order: int, count: int, seed: int) -> list[HyperTable]:
    pool = all_hypersemigroups(order) if order <= EXHAUSTIVE_LIMIT else None
    if pool is None:
        raise OrderTooLarge(order, EXHAUSTIVE_LIMIT)
    rng = random.Random(seed)
    return [pool[rng.randrange(len(pool))] for _ in range(count)]


# -- verification harness -----------------------------------------------------

@dataclass(frozen=True, order=True)
class Counterexample:
    theorem: str
    document: str
    clause: str


@dataclass
class Tally:
    scope: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    applicable: int = 0


@dataclass
class Probe:
    """Agreement between regularity and the all-subsets ``A <= H*A*H`` form."""

    structures: int = 0
    agree: int = 0
    regular: int = 0
    covering: int = 0
    first_disagreement: Optional[str] = None

    @property
    def coincides(self) -> bool:
        return self.agree == self.structures


@dataclass
class VerifyReport:
    order: int
    mode: str
    domain: str
    up_to_iso: bool
    hypergroupoids: int = 0
    hypersemigroups: int = 0
    tallies: dict[TheoremId, Tally] = field(default_factory=dict)
    counterexamples: list[Counterexample] = field(default_factory=list)
    probe: Optional[Probe] = None

    @property
    def failures(self) -> int:
        return sum(t.failed for t in self.tallies.values())

    @property
    def all_pass(self) -> bool:
        return self.failures == 0


def _resolve_theorems(theorems: Optional[Iterable]) -> list[TheoremId]:
    if theorems is None:
        return list(TheoremId)
    chosen = {t if isinstance(t, TheoremId) else parse_theorem(str(t)) for t in theorems}
    return [t for t in TheoremId if t in chosen]


def _scan(tables: Iterable[HyperTable], theorems: Sequence[TheoremId], domain: str,
          up_to_iso: bool, probe: bool, checks=CHECKS) -> VerifyReport:
    """Run ``checks`` over ``tables``; the partial report has empty header fields."""
    rep = VerifyReport(0, "", domain, up_to_iso)
    for t in theorems:
        scope = "hypergroupoid" if t in HYPERGROUPOID_SCOPE and domain == "auto" else "hypersemigroup"
        rep.tallies[t] = Tally(scope)
    if probe:
        rep.probe = Probe()
    found: dict[TheoremId, list] = {t: [] for t in theorems}
    for H in tables:
        if up_to_iso and not is_canonical(H):
            continue
        assoc = H.associative
        if domain != "auto" and not assoc:
            continue
        rep.hypergroupoids += 1
        rep.hypersemigroups += assoc
        F = Facts(H)
        for t in theorems:
            tally = rep.tallies[t]
            if tally.scope == "hypersemigroup" and not assoc:
                continue
            applicable, violation = checks[t](F)
            tally.checked += 1
            tally.applicable += applicable
            if violation is None:
                tally.passed += 1
            else:
                tally.failed += 1
                found[t].append(Counterexample(t.value, serialize_structure(H), violation))
        if probe and assoc:
            p = rep.probe
            reg = F.regular
            covering = classes.is_sandwich_covering(H)
            p.structures += 1
            p.regular += reg
            p.covering += covering
            if reg == covering:
                p.agree += 1
            elif p.first_disagreement is None:
                p.first_disagreement = serialize_structure(H)
    for t in theorems:
        rep.counterexamples.extend(sorted(found[t])[:MAX_COUNTEREXAMPLES])
    return rep


def _merge(parts: Sequence[VerifyReport], header: VerifyReport) -> VerifyReport:
    for part in parts:
        header.hypergroupoids += part.hypergroupoids
        header.hypersemigroups += part.hypersemigroups
        for t, tally in part.tallies.items():
            total = header.tallies.setdefault(t, Tally(tally.scope))
            total.checked += tally.checked
            total.passed += tally.passed
            total.failed += tally.failed
            total.applicable += tally.applicable
        header.counterexamples.extend(part.counterexamples)
        if part.probe is not None:
            if header.probe is None:
                header.probe = Probe()
            hp, pp = header.probe, part.probe
            hp.structures += pp.structures
            hp.agree += pp.agree
            hp.regular += pp.regular
            hp.covering += pp.covering
            if hp.first_disagreement is None:
                hp.first_disagreement = pp.first_disagreement
    order = {t.value: i for i, t in enumerate(TheoremId)}
    per: dict[str, list] = {}
    for c in header.counterexamples:
        per.setdefault(c.theorem, []).append(c)
    header.counterexamples = [
        c for name in sorted(per, key=order.__getitem__)
        for c in sorted(per[name])[:MAX_COUNTEREXAMPLES]
    ]
    return header


def _exhaustive_task(args) -> VerifyReport:
    order, prefix, use_all, theorems, domain, up_to_iso, probe = args
    source = enumerate_hypergroupoids if use_all else enumerate_hypersemigroups
    return _scan(source(order, prefix), theorems, domain, up_to_iso, probe)


def _sample_task(args) -> VerifyReport:
    tables, theorems, domain, up_to_iso, probe = args
    return _scan(tables, theorems, domain, up_to_iso, probe)


def _prefixes(order: int, workers: int) -> list[tuple[int, ...]]:
    if workers <= 1:
        return [()]
    span = (1 << order) - 1
    k = 0
    while k < order * order and span ** k < 4 * workers:
        k += 1
    return list(product(range(1, span + 1), repeat=k))


def resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    return max(1, workers)


def _run(tasks, fn, workers: int) -> list[VerifyReport]:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def verify_corpus(
    order: int,
    theorems: Optional[Iterable] = None,
    mode: Mode = "exhaustive",
    workers: Optional[int] = None,
    domain: str = "auto",
    up_to_iso: bool = False,
) -> VerifyReport:
    """Check the selected statements on every structure in scope.

    ``domain="auto"`` checks hypergroupoid-level statements on all
    hypergroupoids and the rest on hypersemigroups.  ``domain="hypersemigroups"``
    restricts everything to hypersemigroups, which is what makes exhaustive
    order 3 cheap.  ``up_to_iso`` keeps one representative per isomorphism
    class (the one equal to its canonical form).
    """
    if domain not in ("auto", "hypersemigroups"):
        raise ValueError(f"unknown domain {domain!r}")
    chosen = _resolve_theorems(theorems)
    workers = resolve_workers(workers)
    probe = TheoremId.P2_6 in chosen
    if isinstance(mode, Sample):
        mode_text = f"sample count={mode.count} seed={mode.seed}"
        if domain == "auto":
            tables = sample_hypergroupoids(order, mode.count, mode.seed)
        else:
            tables = sample_hypersemigroups(order, mode.count, mode.seed)
        step = max(1, -(-len(tables) // (4 * workers)))
        tasks = [
            (tables[i:i + step], chosen, domain, up_to_iso, probe)
            for i in range(0, len(tables), step)
        ] or [([], chosen, domain, up_to_iso, probe)]
        parts = _run(tasks, _sample_task, workers)
    elif mode == "exhaustive":
        _check_exhaustive(order)
        mode_text = "exhaustive"
        use_all = domain == "auto" and any(t in HYPERGROUPOID_SCOPE for t in chosen)
        tasks = [
            (order, p, use_all, chosen, domain, up_to_iso, probe)
            for p in _prefixes(order, workers)
        ]
        parts = _run(tasks, _exhaustive_task, workers)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    header = VerifyReport(order, mode_text, domain, up_to_iso)
    for t in chosen:
        scope = "hypergroupoid" if t in HYPERGROUPOID_SCOPE and domain == "auto" else "hypersemigroup"
        header.tallies[t] = Tally(scope)
    return _merge(parts, header)


# -- witness search -----------------------------------------------------------

def _guarded(pred):
    def run(H):
        return H.associative and pred(H)
    return run


def _has_proper(kind):
    def run(H):
        return any(ideals.PREDICATES[kind](H, A) for A in range(1, H.carrier))
    return run


WITNESS_PREDICATES = {
    "hypersemigroup": lambda H: H.associative,
    "simple": ideals.is_simple,
    "simple-elementwise": _guarded(ideals.is_simple_elementwise),
    "fuzzy-simple": fuzzy.is_fuzzy_simple,
    "fuzzy-interior-simple": _guarded(fuzzy.is_fuzzy_interior_simple),
    "regular": classes.is_regular,
    "intra-regular": classes.is_intra_regular,
    "subsemigroup-exists-proper": _has_proper(ideals.IdealKind.SUBSEMIGROUP),
    "left-ideal-exists-proper": _has_proper(ideals.IdealKind.LEFT_IDEAL),
    "right-ideal-exists-proper": _has_proper(ideals.IdealKind.RIGHT_IDEAL),
    "ideal-exists-proper": _has_proper(ideals.IdealKind.IDEAL),
    "interior-ideal-exists-proper": _guarded(_has_proper(ideals.IdealKind.INTERIOR_IDEAL)),
}


def find_witness(
    order: int,
    require: Iterable[str] = (),
    forbid: Iterable[str] = (),
    mode: Mode = "exhaustive",
) -> Optional[HyperTable]:
    """First structure, in enumeration order, meeting ``require`` and avoiding ``forbid``.

    Predicates that only make sense with associativity count as false on
    other tables.
    """
    require, forbid = list(require), list(forbid)
    for name in require + forbid:
        if name not in WITNESS_PREDICATES:
            raise UnknownPredicate(name)
    if isinstance(mode, Sample):
        source = sample_hypergroupoids(order, mode.count, mode.seed)
    elif mode == "exhaustive":
        _check_exhaustive(order)
        source = (enumerate_hypersemigroups(order) if "hypersemigroup" in require
                  else enumerate_hypergroupoids(order))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    need = [WITNESS_PREDICATES[p] for p in require]
    avoid = [WITNESS_PREDICATES[p] for p in forbid]
    for H in source:
        if all(p(H) for p in need) and not any(p(H) for p in avoid):
            return H
    return None
