"""Weak-order monotone permutation sequences attached to northwest diagrams.

For a lexicographic northwest diagram with columns ``C_1, ..., C_r`` inside
``N`` rows, :func:`monotone_sequence` builds permutations ``u_1, ..., u_r``
of ``{1..N}`` with

* ``len(u_j) == len(u_{j-1}) + len(u_{j-1}^{-1} u_j)`` (lengths add up), and
* ``u_j({1..|C_j|}) == C_j``.

The second property holds for every northwest diagram. The first holds
exactly when the gap table has the staircase shape tested by
:func:`has_gap_structure`; :func:`verify_sequence` reports both per step.

Each ``u_j`` is a product of cyclic shifts ``kappa(n, i)``, one per level of
the tower of derived diagrams.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Column, Diagram, is_lexicographic, is_northwest, lex_sort
from .exceptions import NotNorthwestError, PreconditionError


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..N}`` in one-line notation: ``images[k-1] == u(k)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, N: int) -> Permutation:
        return cls(tuple(range(1, N + 1)))

    @property
    def N(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: ``(u * v)(k) == u(v(k))``."""
        if self.N != other.N:
            raise ValueError("permutations act on different sets")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.N
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self(k) for k in subset)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.N + 1))

    def to_json(self) -> list[int]:
        return list(self.images)


def length(w: Permutation) -> int:
    """Number of inversions."""
    imgs = w.images
    return sum(1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b])


def gap(column: Sequence[int], N: int) -> int:
    """Largest row missing from ``column`` that lies above one of its rows.

    Returns ``N`` when ``column`` is an initial segment ``{1..k}``.
    """
    present = set(column)
    bottom = max(present, default=0)
    holes = [i for i in range(1, bottom) if i not in present]
    return max(holes) if holes else N


def _derive(columns: Sequence[Column], N: int) -> list[Column]:
    out = []
    for col in columns:
        g = gap(col, N)
        out.append(tuple([i for i in col if i < g] + [i - 1 for i in col if i > g]))
    return out


def derived_diagram(D: Diagram, N: int | None = None) -> Diagram:
    """Close the gap of every column by pushing the rows below it up by one.

    The result fits in ``N - 1`` rows. It is northwest when the top row of
    :func:`gap_table` reads ``N, ..., N, g, ..., g``, but not always
    otherwise: ``[{1, 3, 5}, {3}]`` derives to ``[{1, 3, 4}, {2}]``.
    """
    N = D.n_rows if N is None else N
    if D.max_row > N:
        raise PreconditionError(f"diagram has rows beyond {N}")
    if not is_northwest(D):
        raise NotNorthwestError("derived diagrams are defined for northwest diagrams")
    cols = _derive(D.columns, N)
    if any(not c for c in cols):
        raise PreconditionError("deriving would empty a column; need N >= 2")
    return Diagram(cols, max(N - 1, 1))


def kappa(n: int, N: int, size: int | None = None) -> Permutation:
    """Cyclic shift fixing ``i < n``, sending ``i -> i + 1`` on ``n..N-1`` and ``N -> n``.

    With ``size`` larger than ``N`` the result is extended by fixed points.
    """
    if not 1 <= n <= N:
        raise PreconditionError(f"kappa needs 1 <= n <= N, got n={n}, N={N}")
    size = N if size is None else size
    imgs = []
    for i in range(1, size + 1):
        if i < n or i > N:
            imgs.append(i)
        elif i < N:
            imgs.append(i + 1)
        else:
            imgs.append(n)
    return Permutation(tuple(imgs))


def gap_table(D: Diagram, N: int | None = None) -> dict[int, list[int]]:
    """``{i: [gap(i, j) for each column j]}`` over the derived tower ``D^(N) .. D^(1)``."""
    N = D.n_rows if N is None else N
    cols = list(D.columns)
    table = {}
    for i in range(N, 0, -1):
        table[i] = [gap(c, i) for c in cols]
        if i > 1:
            cols = _derive(cols, i)
    return table


def has_gap_structure(D: Diagram, N: int | None = None) -> bool:
    """Whether every level of the gap table reads ``i, ..., i, g, ..., g`` with
    the switching column non-increasing in ``i``.

    Length additivity of :func:`monotone_sequence` relies on this shape. It
    holds for Young and many skew diagrams but not for every northwest
    diagram: ``[{1}, {2}, {3, 4}]`` has top-level gaps ``[4, 1, 2]``.
    """
    N = D.n_rows if N is None else N
    switch = {}
    for i, row in gap_table(D, N).items():
        J = next((j for j, g in enumerate(row) if g != i), len(row))
        if len(set(row[J:])) > 1:
            return False
        switch[i] = J
    return all(switch[i] <= switch[i - 1] for i in range(2, N + 1))


def monotone_sequence(D: Diagram, N: int | None = None) -> list[Permutation]:
    """Permutations ``u_1..u_r``, one per column of ``D``.

    Non-lexicographic input is lex-sorted first (with a ``UserWarning``);
    the returned sequence then refers to the sorted columns.
    """
    N = D.n_rows if N is None else N
    if D.max_row > N:
        raise PreconditionError(f"diagram has rows beyond {N}")
    if not is_lexicographic(D):
        warnings.warn("diagram is not lexicographic; sorting its columns", UserWarning, stacklevel=2)
        D = lex_sort(D)
    if not is_northwest(D):
        raise NotNorthwestError("monotone sequences need a northwest diagram")
    table = gap_table(D, N)
    seq = []
    for j in range(len(D)):
        u = Permutation.identity(N)
        # u_j = kappa^(N) o kappa^(N-1) o ... o kappa^(1): build from the right
        for i in range(1, N + 1):
            u = kappa(table[i][j], i, N) * u
        seq.append(u)
    return seq


@dataclass(frozen=True)
class StepCheck:
    column: Column
    permutation: Permutation
    alpha: bool
    beta: bool


def verify_sequence(D: Diagram, seq: Sequence[Permutation]) -> list[StepCheck]:
    """Check length additivity and the column-image property step by step."""
    D = lex_sort(D) if not is_lexicographic(D) else D
    checks = []
    prev = Permutation.identity(seq[0].N) if seq else None
    for col, u in zip(D.columns, seq):
        alpha = length(u) == length(prev) + length(prev.inverse() * u)
        beta = u.image(range(1, len(col) + 1)) == frozenset(col)
        checks.append(StepCheck(col, u, alpha, beta))
        prev = u
    return checks
