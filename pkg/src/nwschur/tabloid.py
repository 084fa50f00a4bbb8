"""Standard column tabloids of a blown-up diagram and their fixed-point data.

A tabloid assigns to every distinct column ``C`` of the blowup a set
``t(C)`` of ``|C|`` row labels from ``{1..N}`` such that ``C <= C'`` implies
``t(C) <= t(C')``. Each tabloid contributes one term to the character sum:
its weight vector (how often each label occurs, weighted by the column
multiplicities of the original diagram) and the matrix ``d[i][j]`` counting
connected components of the columns whose filling contains ``i`` but not
``j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .diagram import Blowup, Column, Diagram, blowup
from .exceptions import PreconditionError


@dataclass(frozen=True)
class Tabloid:
    columns: tuple[Column, ...]
    fillings: tuple[tuple[int, ...], ...]

    def __getitem__(self, column: Column) -> tuple[int, ...]:
        return self.fillings[self.columns.index(tuple(column))]

    def permute(self, perm: Sequence[int]) -> Tabloid:
        """Apply ``i -> perm[i-1]`` to every entry."""
        return Tabloid(
            self.columns, tuple(tuple(sorted(perm[i - 1] for i in f)) for f in self.fillings)
        )

    def to_json(self) -> dict[str, list[int]]:
        return {",".join(map(str, c)): list(f) for c, f in zip(self.columns, self.fillings)}


@dataclass(frozen=True)
class FixedPointData:
    weight: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]
    d_plus: int

    def to_json(self) -> dict:
        return {"weight": list(self.weight), "d": [list(r) for r in self.d], "d_plus": self.d_plus}


def _inclusions(columns: Sequence[Column]) -> list[list[int]]:
    sets = [set(c) for c in columns]
    return [[b for b in range(len(sets)) if sets[a] < sets[b]] for a in range(len(sets))]


def enumerate_tabloids(dhat: Diagram | Blowup, N: int | None = None) -> list[Tabloid]:
    """All standard column tabloids of the (distinct) columns of ``dhat``.

    Columns are filled smallest first, so every subset constraint is known
    when a column is reached; the filling must contain the union of the
    fillings of its sub-columns. Returns ``[]`` when some column is taller
    than ``N``.
    """
    if isinstance(dhat, Blowup):
        dhat = dhat.diagram
    N = dhat.n_rows if N is None else N
    cols = dhat.distinct_columns()
    if any(len(c) > N for c in cols):
        return []
    order = sorted(range(len(cols)), key=lambda k: (len(cols[k]), cols[k]))
    sets = [set(c) for c in cols]
    below = [[a for a in range(len(cols)) if sets[a] < sets[k]] for k in range(len(cols))]
    labels = range(1, N + 1)
    found = []
    filling: list[frozenset[int] | None] = [None] * len(cols)

    def extend(pos: int) -> None:
        if pos == len(order):
            found.append(tuple(tuple(sorted(f)) for f in filling))
            return
        k = order[pos]
        required = frozenset().union(*(filling[a] for a in below[k]))
        free = len(cols[k]) - len(required)
        if free < 0:
            return
        spare = [i for i in labels if i not in required]
        for extra in itertools.combinations(spare, free):
            filling[k] = required | frozenset(extra)
            extend(pos + 1)
        filling[k] = None

    extend(0)
    found.sort()
    return [Tabloid(cols, f) for f in found]


def is_tabloid(t: Tabloid, N: int) -> bool:
    sets = [set(c) for c in t.columns]
    for c, f in zip(t.columns, t.fillings):
        if len(f) != len(c) or len(set(f)) != len(f) or any(not 1 <= i <= N for i in f):
            return False
    for a, b in itertools.permutations(range(len(sets)), 2):
        if sets[a] < sets[b] and not set(t.fillings[a]) <= set(t.fillings[b]):
            return False
    return True


def _components(vertices: list[int], up: list[list[int]]) -> int:
    vs = set(vertices)
    adj = {v: set() for v in vs}
    for a in vs:
        for b in up[a]:
            if b in vs:
                adj[a].add(b)
                adj[b].add(a)
    seen: set[int] = set()
    count = 0
    for v in vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def fixed_point_data(t: Tabloid, D: Diagram, N: int | None = None) -> FixedPointData:
    """Weight vector, component-count matrix ``d`` and ``d_plus`` of ``t``.

    Multiplicities are repetition counts of columns in ``D``; columns of the
    blowup absent from ``D`` contribute nothing to the weight.
    """
    N = D.n_rows if N is None else N
    if set(t.columns) != set(blowup(D).columns) or not is_tabloid(t, N):
        raise PreconditionError("tabloid is not a standard tabloid of the blowup of D")
    return _data(t, D.multiplicities(), N, _inclusions(t.columns))


def _data(t: Tabloid, mult: dict[Column, int], N: int, up: list[list[int]]) -> FixedPointData:
    weight = [0] * N
    for c, f in zip(t.columns, t.fillings):
        for i in f:
            weight[i - 1] += mult.get(c, 0)
    fill_sets = [set(f) for f in t.fillings]
    d = [[0] * N for _ in range(N)]
    for i, j in itertools.permutations(range(1, N + 1), 2):
        verts = [k for k, f in enumerate(fill_sets) if i in f and j not in f]
        if verts:
            d[i - 1][j - 1] = _components(verts, up)
    d_plus = sum(d[i][j] for i in range(N) for j in range(i + 1, N))
    return FixedPointData(tuple(weight), tuple(tuple(r) for r in d), d_plus)


def fixed_points(D: Diagram, N: int | None = None) -> list[tuple[Tabloid, FixedPointData]]:
    """Every tabloid of the blowup of ``D`` paired with its fixed-point data."""
    N = D.n_rows if N is None else N
    tabloids = enumerate_tabloids(blowup(D).diagram, N)
    if not tabloids:
        return []
    mult = D.multiplicities()
    up = _inclusions(tabloids[0].columns)
    return [(t, _data(t, mult, N, up)) for t in tabloids]
