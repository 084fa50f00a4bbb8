"""Diagram generators and independent oracles shared by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from nwschur.diagram import Diagram, is_northwest, lex_sort, northwest_rearrangement


def northwest_closure(squares: set[tuple[int, int]]) -> set[tuple[int, int]]:
    closed = set(squares)
    changed = True
    while changed:
        changed = False
        for (i1, j1), (i2, j2) in itertools.product(list(closed), repeat=2):
            sq = (min(i1, i2), min(j1, j2))
            if sq not in closed:
                closed.add(sq)
                changed = True
    return closed


def diagram_from_squares(squares, n_rows: int) -> Diagram:
    by_col: dict[int, list[int]] = {}
    for i, j in squares:
        by_col.setdefault(j, []).append(i)
    return Diagram([by_col[j] for j in sorted(by_col)], n_rows)


def random_northwest(rng: random.Random, max_rows: int = 6, max_cols: int = 6) -> Diagram:
    """Random lexicographic northwest diagram (possibly empty)."""
    N = rng.randint(1, max_rows)
    r = rng.randint(1, max_cols)
    k = rng.randint(0, N * r // 2 + 1)
    seeds = {(rng.randint(1, N), rng.randint(1, r)) for _ in range(k)}
    D = diagram_from_squares(northwest_closure(seeds), N)
    return lex_sort(D)


@st.composite
def northwest_diagrams(draw, max_rows: int = 4, max_cols: int = 4, min_rows: int = 1):
    N = draw(st.integers(min_rows, max_rows))
    r = draw(st.integers(1, max_cols))
    seeds = draw(st.sets(st.tuples(st.integers(1, N), st.integers(1, r)), max_size=N * r))
    return lex_sort(diagram_from_squares(northwest_closure(seeds), N))


def canonical_key(columns, N: int):
    """Representative of a column multiset up to row and column permutations."""
    return min(
        tuple(sorted(tuple(sorted(p[i - 1] for i in c)) for c in columns))
        for p in itertools.permutations(range(1, N + 1))
    )


def northwest_classes(max_squares: int, N: int) -> list[Diagram]:
    """All diagrams with at most ``max_squares`` squares in ``N`` rows that are
    northwest after some row and column permutation, one per equivalence class,
    each returned in a northwest lexicographic arrangement."""
    subsets = [c for k in range(1, N + 1) for c in itertools.combinations(range(1, N + 1), k)]
    out = {}

    def grow(start, cols, size):
        key = canonical_key(cols, N)
        if key not in out:
            found = northwest_rearrangement(Diagram(cols, N))
            if found is not None:
                out[key] = found[1]
        for idx in range(start, len(subsets)):
            c = subsets[idx]
            if size + len(c) <= max_squares:
                grow(idx, cols + [c], size + len(c))

    grow(0, [], 0)
    return [out[k] for k in sorted(out)]


def partitions(n: int, max_part: int | None = None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def weyl_dimension(lam, N: int) -> int:
    lam = list(lam) + [0] * (N - len(lam))
    num = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def gaussian_binomial(n: int, k: int) -> dict[int, int]:
    """Coefficients of [n choose k]_t via the q-Pascal rule, keyed by power of t."""
    if k < 0 or k > n:
        return {}
    if k == 0 or k == n:
        return {0: 1}
    out: dict[int, int] = {}
    for p, c in gaussian_binomial(n - 1, k - 1).items():
        out[p] = out.get(p, 0) + c
    for p, c in gaussian_binomial(n - 1, k).items():
        out[p + k] = out.get(p + k, 0) + c
    return out


def inversions(images) -> int:
    return sum(1 for a, b in itertools.combinations(images, 2) if a > b)


def is_northwest_brute(D: Diagram) -> bool:
    sq = set(D.squares())
    return all(
        (min(i1, i2), min(j1, j2)) in sq for (i1, j1), (i2, j2) in itertools.product(sq, repeat=2)
    )


__all__ = [name for name in dir() if not name.startswith("_")] + ["is_northwest"]
