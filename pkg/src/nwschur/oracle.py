"""Brute-force Schur module characters from row symmetrizers and column antisymmetrizers.

``S_D`` is the image of ``V^{(x)D}`` under the right action of the row
symmetrizer followed by the column antisymmetrizer, both acting on tensor
positions (the squares of ``D``). Position permutations preserve the
content of a basis tensor, so each content block (a weight space) is
handled separately and its image dimension is an exact matrix rank.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .diagram import Diagram
from .exceptions import PreconditionError, SizeBoundError
from .polynomial import LaurentPolynomial

Filling = tuple[int, ...]

DEFAULT_MAX_SQUARES = 6
DEFAULT_MAX_ROWS = 3


@dataclass(frozen=True)
class ContentBlock:
    content: tuple[int, ...]
    basis: tuple[Filling, ...]

    def index(self) -> dict[Filling, int]:
        return {f: k for k, f in enumerate(self.basis)}


def content_blocks(D: Diagram, N: int) -> list[ContentBlock]:
    """One block per composition of ``|D|`` into ``N`` non-negative parts."""
    n = D.size
    blocks = []
    for content in _compositions(n, N):
        letters = [i for i, c in enumerate(content, 1) for _ in range(c)]
        basis = tuple(sorted(set(itertools.permutations(letters))))
        blocks.append(ContentBlock(content, basis))
    return blocks


def _compositions(n: int, parts: int):
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def _position_groups(D: Diagram) -> tuple[list[list[int]], list[list[int]]]:
    squares = D.squares()
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for k, (i, j) in enumerate(squares):
        rows.setdefault(i, []).append(k)
        cols.setdefault(j, []).append(k)
    return list(rows.values()), list(cols.values())


def _sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _group(n: int, blocks: list[list[int]]):
    """All position permutations preserving each block, as tuples ``pi[k]``."""
    per_block = [list(itertools.permutations(b)) for b in blocks]
    for choice in itertools.product(*per_block):
        pi = list(range(n))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                pi[src] = dst
        yield tuple(pi)


def _act(f: Filling, pi: Sequence[int]) -> Filling:
    # (f . pi)(k) = f(pi(k))
    return tuple(f[p] for p in pi)


def permutation_action_matrix(
    D: Diagram, pi: Sequence[int], block: ContentBlock, kind: str | None = None
) -> list[list[Fraction]]:
    """0/1 matrix of ``e_f -> e_{f o pi}`` on ``block`` (row vectors act from the left).

    ``kind`` set to ``"row"`` or ``"column"`` additionally checks that ``pi``
    only moves squares within rows, respectively columns.
    """
    n = D.size
    if sorted(pi) != list(range(n)):
        raise PreconditionError("pi is not a permutation of the squares")
    if kind is not None:
        rows, cols = _position_groups(D)
        groups = rows if kind == "row" else cols
        owner = {k: g for g, members in enumerate(groups) for k in members}
        if any(owner[k] != owner[pi[k]] for k in range(n)):
            raise PreconditionError(f"pi does not preserve the {kind}s of the diagram")
    idx = block.index()
    size = len(block.basis)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for a, f in enumerate(block.basis):
        mat[a][idx[_act(f, pi)]] += 1
    return mat


def symmetrizer_matrices(
    D: Diagram, block: ContentBlock
) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Normalized row symmetrizer and column antisymmetrizer on ``block``."""
    n = D.size
    rows, cols = _position_groups(D)
    idx = block.index()
    size = len(block.basis)
    out = []
    for groups, signed in ((rows, False), (cols, True)):
        order = 1
        for g in groups:
            order *= factorial(len(g))
        mat = [[Fraction(0)] * size for _ in range(size)]
        for pi in _group(n, groups):
            s = _sign(pi) if signed else 1
            for a, f in enumerate(block.basis):
                mat[a][idx[_act(f, pi)]] += Fraction(s, order)
        out.append(mat)
    return out[0], out[1]


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            a = m[r][col]
            m[r] = [(p * m[r][c] - a * m[rank][c]) // prev for c in range(n_cols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _block_rank(D: Diagram, block: ContentBlock, row_group, col_group) -> int:
    idx = block.index()
    size = len(block.basis)
    # unnormalized sums have the same image as the idempotents
    alpha_rows: dict[tuple[tuple[int, int], ...], None] = {}
    for f in block.basis:
        row = Counter(idx[_act(f, pi)] for pi in row_group)
        alpha_rows[tuple(sorted(row.items()))] = None
    beta = []
    for f in block.basis:
        row = [0] * size
        for pi, s in col_group:
            row[idx[_act(f, pi)]] += s
        beta.append(row)
    product = []
    for arow in alpha_rows:
        out = [0] * size
        for g, c in arow:
            brow = beta[g]
            for k in range(size):
                if brow[k]:
                    out[k] += c * brow[k]
        product.append(out)
    return integer_rank(product)


def tensor_schur_character(
    D: Diagram,
    N: int | None = None,
    max_squares: int = DEFAULT_MAX_SQUARES,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> LaurentPolynomial:
    """Character of ``S_D`` for ``GL(N)`` computed from its definition.

    Works for any diagram, northwest or not. Refuses instances with more
    than ``max_squares`` squares or ``N > max_rows``.
    """
    N = D.n_rows if N is None else N
    if D.max_row > N:
        raise PreconditionError(f"diagram uses row {D.max_row} but N={N}")
    if D.size > max_squares or N > max_rows:
        raise SizeBoundError(
            f"oracle bound exceeded: |D|={D.size} (max {max_squares}), N={N} (max {max_rows})"
        )
    n = D.size
    rows, cols = _position_groups(D)
    row_group = list(_group(n, rows))
    col_group = [(pi, _sign(pi)) for pi in _group(n, cols)]
    terms = {}
    for block in content_blocks(D, N):
        rank = _block_rank(D, block, row_group, col_group)
        if rank:
            terms[block.content] = rank
    return LaurentPolynomial(terms, N)
