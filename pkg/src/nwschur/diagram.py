"""Diagrams as ordered multisets of columns.

A column is a strictly increasing tuple of positive row indices, so Python's
built-in tuple ordering coincides with the lexicographic column order used
throughout: a proper initial subset precedes its extension, otherwise the
first differing entry decides.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .exceptions import DiagramParseError, PreconditionError

Column = tuple[int, ...]


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


def make_column(rows: Iterable[int]) -> Column:
    col = tuple(sorted(set(rows)))
    if not col:
        raise PreconditionError("columns must be non-empty")
    if col[0] < 1:
        raise PreconditionError(f"row indices must be positive, got {col[0]}")
    return col


@dataclass(frozen=True)
class Diagram:
    """Ordered list of non-empty columns inside ``n_rows`` rows.

    Repeated columns are allowed; the repetition count of a column is its
    multiplicity.
    """

    columns: tuple[Column, ...]
    n_rows: int

    def __init__(self, columns: Iterable[Iterable[int]], n_rows: int | None = None):
        cols = tuple(make_column(c) for c in columns)
        top = max((c[-1] for c in cols), default=0)
        if n_rows is None:
            n_rows = max(top, 1)
        if n_rows < 1:
            raise PreconditionError(f"n_rows must be positive, got {n_rows}")
        if top > n_rows:
            raise PreconditionError(f"diagram uses row {top} but n_rows={n_rows}")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "n_rows", n_rows)

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    @property
    def size(self) -> int:
        """Number of squares."""
        return sum(len(c) for c in self.columns)

    @property
    def max_row(self) -> int:
        return max((c[-1] for c in self.columns), default=0)

    def squares(self) -> list[tuple[int, int]]:
        """All squares ``(row, column)``, columns numbered from 1."""
        return [(i, j) for j, col in enumerate(self.columns, 1) for i in col]

    def multiplicities(self) -> dict[Column, int]:
        return dict(Counter(self.columns))

    def distinct_columns(self) -> tuple[Column, ...]:
        return tuple(sorted(set(self.columns)))

    def with_rows(self, n_rows: int) -> Diagram:
        return Diagram(self.columns, n_rows)

    def permute_rows(self, perm: Sequence[int]) -> Diagram:
        """Relabel row ``i`` as ``perm[i-1]``."""
        return Diagram(([perm[i - 1] for i in c] for c in self.columns), self.n_rows)

    def to_json(self) -> dict:
        return {"n_rows": self.n_rows, "columns": [list(c) for c in self.columns]}

    def to_grid(self) -> str:
        lines = []
        for i in range(1, self.n_rows + 1):
            lines.append("".join("X" if i in c else "." for c in self.columns))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# parsing


def parse_diagram(text: str, n_rows: int | None = None) -> Diagram:
    """Parse a diagram from JSON or from an ASCII grid of ``X`` and ``.``.

    JSON may be a bare list of columns or ``{"n_rows": N, "columns": [...]}``.
    In a grid, column ``j`` of the text holds the rows marked ``X``.
    """
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        return _parse_json(stripped, n_rows)
    return _parse_grid(text, n_rows)


def _parse_json(text: str, n_rows: int | None) -> Diagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if isinstance(data, dict):
        if "columns" not in data:
            raise DiagramParseError("JSON object needs a 'columns' key")
        declared = data.get("n_rows")
        if declared is not None and (not isinstance(declared, int) or isinstance(declared, bool)):
            raise DiagramParseError("'n_rows' must be an integer")
        if n_rows is None:
            n_rows = declared
        elif declared is not None and declared > n_rows:
            n_rows = declared
        cols = data["columns"]
    else:
        cols = data
    if not isinstance(cols, list):
        raise DiagramParseError("columns must be a JSON array of integer arrays")
    parsed = []
    for k, col in enumerate(cols, 1):
        if not isinstance(col, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in col
        ):
            raise DiagramParseError(f"column {k} is not an array of integers")
        if not col:
            raise DiagramParseError(f"column {k} is empty")
        if min(col) < 1:
            raise DiagramParseError(f"column {k} has non-positive row index {min(col)}")
        if len(set(col)) != len(col):
            raise DiagramParseError(f"column {k} repeats a row index")
        parsed.append(col)
    return _build(parsed, n_rows)


def _parse_grid(text: str, n_rows: int | None) -> Diagram:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        return Diagram([], n_rows)
    width = max(len(line.rstrip()) for line in lines)
    cols: list[list[int]] = [[] for _ in range(width)]
    for i, line in enumerate(lines, 1):
        for j, ch in enumerate(line.rstrip(), 1):
            if ch in "Xx":
                cols[j - 1].append(i)
            elif ch not in ". ":
                raise DiagramParseError(f"unexpected character {ch!r}", i, j)
    for j, col in enumerate(cols, 1):
        if not col:
            raise DiagramParseError(f"grid column {j} has no squares", None, j)
    if n_rows is None:
        n_rows = len(lines)
    return _build(cols, n_rows)


def _build(cols, n_rows):
    try:
        return Diagram(cols, n_rows)
    except PreconditionError as exc:
        raise DiagramParseError(str(exc)) from exc


def serialize_diagram(D: Diagram, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(D.to_json(), sort_keys=True)
    if fmt == "grid":
        return D.to_grid()
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# orders


def lex_compare(c1: Column, c2: Column) -> Ordering:
    c1, c2 = tuple(c1), tuple(c2)
    if c1 == c2:
        return Ordering.EQ
    return Ordering.LT if c1 < c2 else Ordering.GT


def is_initial_subset(c1: Column, c2: Column) -> bool:
    return len(c1) <= len(c2) and tuple(c2[: len(c1)]) == tuple(c1)


def lex_sort(D: Diagram) -> Diagram:
    return Diagram(sorted(D.columns), D.n_rows)


def is_lexicographic(D: Diagram) -> bool:
    return all(a <= b for a, b in zip(D.columns, D.columns[1:]))


def is_northwest(D: Diagram) -> bool:
    """Closed under taking (min row, min column) of two squares."""
    # for columns j1 < j2 the condition reads: a row of C_j2 lying above the
    # bottom of C_j1 must itself be in C_j1
    for j1, c1 in enumerate(D.columns):
        s1, bottom = set(c1), c1[-1]
        for c2 in D.columns[j1 + 1:]:
            if any(i < bottom and i not in s1 for i in c2):
                return False
    return True


def northwest_rearrangement(D: Diagram) -> tuple[tuple[int, ...], Diagram] | None:
    """Find a row relabelling making the lex-sorted diagram northwest.

    Returns ``(perm, diagram)`` with ``perm[i-1]`` the new label of row ``i``,
    or ``None`` if no row permutation works. Identity is tried first.
    """
    N = D.n_rows
    for perm in itertools.permutations(range(1, N + 1)):
        cand = lex_sort(D.permute_rows(perm))
        if is_northwest(cand):
            return perm, cand
    return None


# ---------------------------------------------------------------------------
# blowup and poset


@dataclass(frozen=True)
class Blowup:
    """Intersection closure of a diagram's columns.

    ``multiplicities[k]`` is the repetition count in the original diagram of
    ``diagram.columns[k]``; added (phantom) columns have multiplicity 0.
    """

    diagram: Diagram
    multiplicities: tuple[int, ...]

    @property
    def columns(self) -> tuple[Column, ...]:
        return self.diagram.columns

    @property
    def phantom(self) -> tuple[bool, ...]:
        return tuple(m == 0 for m in self.multiplicities)


def blowup(D: Diagram) -> Blowup:
    closed = set(D.columns)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = tuple(sorted(set(a) & set(b)))
                if c and c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    cols = sorted(closed)
    counts = Counter(D.columns)
    return Blowup(Diagram(cols, D.n_rows), tuple(counts.get(c, 0) for c in cols))


def is_blowup_closed(D: Diagram) -> bool:
    return set(blowup(D).columns) == set(D.columns)


@dataclass(frozen=True)
class ColumnPoset:
    distinct_columns: tuple[Column, ...]
    cover_pairs: tuple[tuple[int, int], ...]  # (lower, upper) indices


def column_poset(D: Diagram) -> ColumnPoset:
    cols = D.distinct_columns()
    sets = [set(c) for c in cols]
    covers = []
    for a, sa in enumerate(sets):
        for b, sb in enumerate(sets):
            if a == b or not sa < sb:
                continue
            if not any(sa < sc < sb for sc in sets):
                covers.append((a, b))
    return ColumnPoset(cols, tuple(covers))


# ---------------------------------------------------------------------------
# rectangle complements and standard shapes


def complement_in_rectangle(D: Diagram, N: int, r: int) -> Diagram:
    """Complement of ``D`` inside the ``N`` x ``r`` rectangle.

    The columns of ``D`` occupy slots ``1..len(D)``; remaining slots are empty.
    Full columns of ``D`` leave no column in the result.
    """
    if len(D) > r or D.max_row > N:
        raise PreconditionError(f"diagram does not fit in a {N}x{r} rectangle")
    slots = list(D.columns) + [()] * (r - len(D))
    out = []
    for col in slots:
        rest = [i for i in range(1, N + 1) if i not in col]
        if rest:
            out.append(rest)
    return Diagram(out, N)


def complement_slots(D: Diagram, N: int, r: int) -> list[Column]:
    """Positional complement, keeping empty columns as ``()`` placeholders."""
    if len(D) > r or D.max_row > N:
        raise PreconditionError(f"diagram does not fit in a {N}x{r} rectangle")
    slots = list(D.columns) + [()] * (r - len(D))
    return [tuple(i for i in range(1, N + 1) if i not in c) for c in slots]


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def young_diagram(partition: Sequence[int], n_rows: int | None = None) -> Diagram:
    """Young diagram with ``partition[i]`` squares in row ``i + 1``."""
    return Diagram([range(1, h + 1) for h in conjugate(partition)], n_rows)


def skew_diagram(outer: Sequence[int], inner: Sequence[int] = (), n_rows: int | None = None) -> Diagram:
    """Skew shape ``outer/inner`` with its column order reversed.

    Reversing the columns of a skew shape always yields a northwest diagram,
    the orientation the character engine expects. Empty columns are dropped.
    """
    inner = list(inner) + [0] * (len(outer) - len(inner))
    if any(m > l for l, m in zip(outer, inner)) or len(inner) > len(outer):
        raise PreconditionError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    width = max(outer, default=0)
    cols = []
    for j in range(width, 0, -1):
        col = [i for i, (l, m) in enumerate(zip(outer, inner), 1) if m < j <= l]
        if col:
            cols.append(col)
    return Diagram(cols, n_rows)
