"""Slow, literal reference implementations on Python sets.

Nothing here touches the bit-mask machinery of the package; tables are plain
``rows[x][y] -> frozenset``.
"""
from itertools import chain, combinations, product


def rows_of(H):
    n = H.order
    return [[frozenset(i for i in range(n) if H.cells[x * n + y] >> i & 1) for y in range(n)]
            for x in range(n)]


def nonempty_subsets(n):
    elems = range(n)
    return [frozenset(c) for c in chain.from_iterable(combinations(elems, k) for k in range(1, n + 1))]


def star(rows, A, B):
    out = set()
    for a in A:
        for b in B:
            out |= rows[a][b]
    return frozenset(out)


def chain_product(rows, parts):
    """Union over every tuple of representatives of the left-bracketed singleton product."""
    out = set()
    for reps in product(*parts):
        acc = frozenset([reps[0]])
        for r in reps[1:]:
            acc = star(rows, acc, {r})
        out |= acc
    return frozenset(out)


def associative_elementwise(rows):
    n = len(rows)
    return all(star(rows, {x}, rows[y][z]) == star(rows, rows[x][y], {z})
               for x, y, z in product(range(n), repeat=3))


def associative_on_subsets(rows):
    subs = nonempty_subsets(len(rows))
    return all(star(rows, star(rows, A, B), C) == star(rows, A, star(rows, B, C))
               for A in subs for B in subs for C in subs)


def all_tables(n):
    subs = nonempty_subsets(n)
    for choice in product(subs, repeat=n * n):
        yield [list(choice[x * n:(x + 1) * n]) for x in range(n)]


def is_ideal(rows, A):
    H = frozenset(range(len(rows)))
    return star(rows, H, A) <= A and star(rows, A, H) <= A


def is_interior(rows, A):
    H = frozenset(range(len(rows)))
    return star(rows, star(rows, H, A), H) <= A


def is_simple(rows):
    n = len(rows)
    H = frozenset(range(n))
    return [A for A in nonempty_subsets(n) if is_ideal(rows, A)] == [H]


def fuzzy_left(rows, f):
    n = len(rows)
    return all(f[u] >= f[y] for x in range(n) for y in range(n) for u in rows[x][y])


def fuzzy_right(rows, f):
    n = len(rows)
    return all(f[u] >= f[x] for x in range(n) for y in range(n) for u in rows[x][y])


def fuzzy_interior(rows, f):
    n = len(rows)
    return all(f[u] >= f[a]
               for x in range(n) for a in range(n) for y in range(n)
               for u in star(rows, rows[x][a], {y}))


def all_weak_orders(n):
    """Every map range(n) -> range(n) reduced to dense ranks, deduplicated."""
    seen = set()
    for raw in product(range(n), repeat=n):
        levels = sorted(set(raw))
        seen.add(tuple(levels.index(v) for v in raw))
    return seen


def fubini(n):
    """Ordered Bell numbers via the k! S(n,k) sum."""
    from math import comb, factorial

    def stirling2(n, k):
        return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)

    return sum(factorial(k) * stirling2(n, k) for k in range(1, n + 1))


def is_fuzzy_simple_bruteforce(rows, grades=(0, 1, 2)):
    """Try every grade assignment from a small pool; exact for |pool| >= order."""
    n = len(rows)
    for f in product(grades, repeat=n):
        if len(set(f)) > 1 and fuzzy_left(rows, f) and fuzzy_right(rows, f):
            return False
    return True
