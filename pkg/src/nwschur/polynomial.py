"""Sparse Laurent polynomials with exact integer coefficients.

Terms are stored as ``{exponent tuple: int}`` with no zero coefficients.
Besides ring arithmetic this module provides exact division, Schur and skew
Schur polynomials, Schur expansion of symmetric polynomials, and the
common-denominator summation of fixed-point terms.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Mapping, Sequence

from .exceptions import (
    NonDominantLeadingTermError,
    NonExactDivision,
    NotPolynomialError,
    NotSymmetricError,
    PreconditionError,
)

Exponent = tuple[int, ...]


class LaurentPolynomial:
    __slots__ = ("terms", "n_vars")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, n_vars: int = 0):
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n_vars:
                raise ValueError(f"exponent {exp} does not have {n_vars} entries")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self.n_vars = n_vars

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], n_vars: int) -> LaurentPolynomial:
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.terms = terms
        p.n_vars = n_vars
        return p

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> LaurentPolynomial:
        return cls._raw({}, n_vars)

    @classmethod
    def one(cls, n_vars: int) -> LaurentPolynomial:
        return cls._raw({(0,) * n_vars: 1}, n_vars)

    @classmethod
    def constant(cls, c: int, n_vars: int) -> LaurentPolynomial:
        return cls._raw({(0,) * n_vars: int(c)} if c else {}, n_vars)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> LaurentPolynomial:
        exp = tuple(int(e) for e in exponents)
        return cls._raw({exp: int(coeff)} if coeff else {}, len(exp))

    @classmethod
    def variable(cls, i: int, n_vars: int) -> LaurentPolynomial:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n_vars:
            raise ValueError(f"variable index {i} out of range 1..{n_vars}")
        exp = [0] * n_vars
        exp[i - 1] = 1
        return cls._raw({tuple(exp): 1}, n_vars)

    # predicates and accessors -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.n_vars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self.terms.items())))

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exp in self.terms for e in exp)

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.n_vars
        return tuple(min(col) for col in zip(*self.terms))

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in decreasing lexicographic order of exponents."""
        return sorted(self.terms.items(), reverse=True)

    # arithmetic ------------------------------------------------------------

    def _check(self, other: LaurentPolynomial) -> None:
        if self.n_vars != other.n_vars:
            raise ValueError(f"variable count mismatch: {self.n_vars} vs {other.n_vars}")

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.n_vars)
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return LaurentPolynomial._raw(out, self.n_vars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw({e: -c for e, c in self.terms.items()}, self.n_vars)

    def __sub__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            if not other:
                return LaurentPolynomial.zero(self.n_vars)
            return LaurentPolynomial._raw({e: c * other for e, c in self.terms.items()}, self.n_vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c}, self.n_vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only of monomials")
            ((exp, c),) = self.terms.items()
            if c not in (1, -1):
                raise ValueError("negative powers only of unit monomials")
            return LaurentPolynomial.monomial([e * k for e in exp], c ** (-k))
        result = LaurentPolynomial.one(self.n_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exponents: Sequence[int]) -> LaurentPolynomial:
        """Multiply by the monomial ``x^exponents``."""
        s = tuple(exponents)
        return LaurentPolynomial._raw(
            {tuple(a + b for a, b in zip(e, s)): c for e, c in self.terms.items()}, self.n_vars
        )

    def permute_variables(self, perm: Sequence[int]) -> LaurentPolynomial:
        """Substitute ``x_i -> x_{perm[i-1]}``."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.n_vars
            for i, e in enumerate(exp):
                new[perm[i] - 1] = e
            out[tuple(new)] = c
        return LaurentPolynomial._raw(out, self.n_vars)

    def exact_divide(self, q: LaurentPolynomial) -> LaurentPolynomial:
        return exact_divide(self, q)

    # display -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self}, n_vars={self.n_vars})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["x%d" % (i + 1) for i in range(self.n_vars)]
        if self.n_vars == 1:
            names = ["q"]
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    # serialization -----------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], n_vars: int | None = None) -> LaurentPolynomial:
        if n_vars is None:
            n_vars = len(data[0]["exponents"]) if data else 0
        return cls({tuple(t["exponents"]): int(t["coeff"]) for t in data}, n_vars)


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p + q


def multiply(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def negate(p: LaurentPolynomial) -> LaurentPolynomial:
    return -p


def invert_variables(p: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute ``x_i -> 1/x_i``."""
    return LaurentPolynomial._raw(
        {tuple(-e for e in exp): c for exp, c in p.terms.items()}, p.n_vars
    )


def evaluate_at_ones(p: LaurentPolynomial) -> int:
    return sum(p.terms.values())


# ---------------------------------------------------------------------------
# exact division


def _grlex_key(exp: Exponent) -> tuple:
    # heapq is a min-heap; negate to pop the graded-lex largest first
    return (-sum(exp), tuple(-e for e in exp))


def exact_divide(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``r`` with ``p == q * r``, or raise :class:`NonExactDivision`.

    Both operands are shifted by monomials to honest polynomials, ``q`` so
    that no variable divides it. Division then runs in the polynomial ring
    under graded lexicographic order; over that ring an exact quotient
    exists iff every leading term of the running remainder is divisible by
    the leading term of ``q``.
    """
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.n_vars
    if p.is_zero():
        return LaurentPolynomial.zero(n)
    qmin = q.min_exponents()
    pmin = p.min_exponents()
    qs = [(tuple(a - b for a, b in zip(e, qmin)), c) for e, c in q.terms.items()]
    lead_exp, lead_c = min(qs, key=lambda t: _grlex_key(t[0]))
    rest = [(e, c) for e, c in qs if e != lead_exp]

    rem = {tuple(a - b for a, b in zip(e, pmin)): c for e, c in p.terms.items()}
    heap = [(_grlex_key(e), e) for e in rem]
    heapq.heapify(heap)
    quotient: dict[Exponent, int] = {}
    while rem:
        _, e = heapq.heappop(heap)
        c = rem.pop(e, None)
        if c is None:
            continue
        diff = tuple(a - b for a, b in zip(e, lead_exp))
        if any(d < 0 for d in diff):
            raise NonExactDivision(f"leading term x^{e} not divisible by x^{lead_exp}")
        m, r = divmod(c, lead_c)
        if r:
            raise NonExactDivision(f"coefficient {c} not divisible by {lead_c}")
        quotient[diff] = m
        for qe, qc in rest:
            key = tuple(a + b for a, b in zip(diff, qe))
            v = rem.get(key, 0) - m * qc
            if v:
                if key not in rem:
                    heapq.heappush(heap, (_grlex_key(key), key))
                rem[key] = v
            else:
                rem.pop(key, None)
    offset = tuple(a - b for a, b in zip(pmin, qmin))
    return LaurentPolynomial._raw(quotient, n).shift(offset)


# ---------------------------------------------------------------------------
# fixed-point terms


class SignConvention(Enum):
    """``W``: numerator x^-wt over (1 - x_i/x_j); ``S``: x^wt over (1 - x_j/x_i)."""

    W = "W-form"
    S = "S-form"


@dataclass(frozen=True)
class FixedPointTerm:
    numerator_weight: tuple[int, ...]
    denominator_exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.numerator_weight)
        d = self.denominator_exponents
        if len(d) != n or any(len(row) != n for row in d):
            raise ValueError("denominator exponent matrix must be N x N")
        if any(d[i][i] for i in range(n)):
            raise ValueError("denominator exponent matrix must have zero diagonal")
        if any(x < 0 for row in d for x in row):
            raise ValueError("denominator exponents must be non-negative")


def _one_minus_y_power(i: int, j: int, k: int, n: int, form: SignConvention) -> LaurentPolynomial:
    """``(1 - y_ij)^k`` expanded, with ``y_ij`` chosen by ``form``."""
    step = [0] * n
    if form is SignConvention.W:
        step[i], step[j] = 1, -1
    else:
        step[i], step[j] = -1, 1
    terms = {}
    for m in range(k + 1):
        terms[tuple(m * s for s in step)] = comb(k, m) * (-1) ** m
    return LaurentPolynomial._raw(terms, n)


def _term_numerator(term: FixedPointTerm, bounds, form: SignConvention) -> LaurentPolynomial:
    n = len(term.numerator_weight)
    sign = -1 if form is SignConvention.W else 1
    acc = LaurentPolynomial.monomial([sign * w for w in term.numerator_weight])
    for (i, j), M in bounds.items():
        k = M - term.denominator_exponents[i][j]
        if k:
            acc = acc * _one_minus_y_power(i, j, k, n, form)
    return acc


def sum_rational_terms(
    terms: Sequence[FixedPointTerm],
    sign_convention: SignConvention | str = SignConvention.S,
    n_vars: int | None = None,
    overshoot: int = 0,
    workers: int = 1,
) -> LaurentPolynomial:
    """Sum ``num_t / prod_{i != j} (1 - y_ij)^{d_ij(t)}`` exactly.

    Every term is brought over the common denominator
    ``prod (1 - y_ij)^{M_ij}`` with ``M_ij = max_t d_ij(t) + overshoot``, the
    numerators are added, and the sum is divided exactly by each factor of
    the common denominator in turn. A non-zero remainder raises
    :class:`NonExactDivision`.
    """
    form = SignConvention(sign_convention) if isinstance(sign_convention, str) else sign_convention
    if not terms:
        return LaurentPolynomial.zero(n_vars or 0)
    n = len(terms[0].numerator_weight)
    bounds: dict[tuple[int, int], int] = {}
    for i, j in itertools.permutations(range(n), 2):
        M = max(t.denominator_exponents[i][j] for t in terms)
        if M or overshoot:
            bounds[(i, j)] = M + overshoot

    if workers > 1 and len(terms) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [c for c in (terms[k::workers] for k in range(workers)) if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(_sum_numerators, chunks, [bounds] * len(chunks), [form] * len(chunks)))
        total = LaurentPolynomial.zero(n)
        for part in partials:
            total = total + part
    else:
        total = _sum_numerators(terms, bounds, form)

    for (i, j), M in sorted(bounds.items()):
        factor = _one_minus_y_power(i, j, 1, n, form)
        for _ in range(M):
            total = exact_divide(total, factor)
    return total


def _sum_numerators(terms, bounds, form) -> LaurentPolynomial:
    n = len(terms[0].numerator_weight) if terms else 0
    acc: dict[Exponent, int] = {}
    for t in terms:
        for e, c in _term_numerator(t, bounds, form).terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPolynomial._raw({e: c for e, c in acc.items() if c}, n)


# ---------------------------------------------------------------------------
# Schur polynomials


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise PreconditionError(f"{lam} is not a partition")
    return lam


def _alternant(exps: Sequence[int]) -> LaurentPolynomial:
    n = len(exps)
    terms = {}
    for perm in itertools.permutations(range(n)):
        exp = [0] * n
        for pos, k in enumerate(perm):
            exp[k] = exps[pos]
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        terms[tuple(exp)] = -1 if inversions % 2 else 1
    return LaurentPolynomial._raw(terms, n)


def schur_polynomial(lam: Sequence[int], N: int) -> LaurentPolynomial:
    """Schur polynomial ``s_lam(x_1..x_N)`` as a ratio of alternants."""
    lam = _check_partition(lam)
    lam = tuple(x for x in lam if x)
    if len(lam) > N:
        raise PreconditionError(f"partition {lam} has more than {N} parts")
    padded = lam + (0,) * (N - len(lam))
    delta = tuple(range(N - 1, -1, -1))
    return exact_divide(
        _alternant([a + b for a, b in zip(padded, delta)]), _alternant(delta)
    )


def complete_homogeneous(k: int, N: int) -> LaurentPolynomial:
    if k < 0:
        return LaurentPolynomial.zero(N)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(N), k):
        exp = [0] * N
        for v in combo:
            exp[v] += 1
        terms[tuple(exp)] = 1
    return LaurentPolynomial._raw(terms, N)


def _determinant(matrix: list[list[LaurentPolynomial]], n_vars: int) -> LaurentPolynomial:
    size = len(matrix)
    if size == 0:
        return LaurentPolynomial.one(n_vars)
    # Laplace expansion along the first row; matrices here are at most ~6x6
    total = LaurentPolynomial.zero(n_vars)
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        sub = entry * _determinant(minor, n_vars)
        total = total - sub if col % 2 else total + sub
    return total


def skew_schur_polynomial(lam: Sequence[int], mu: Sequence[int], N: int) -> LaurentPolynomial:
    """``s_{lam/mu}(x_1..x_N)`` via the Jacobi-Trudi determinant in ``h_k``."""
    lam = tuple(x for x in _check_partition(lam) if x)
    mu = tuple(x for x in _check_partition(mu) if x)
    if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
        raise PreconditionError(f"{mu} is not contained in {lam}")
    size = len(lam)
    mu = mu + (0,) * (size - len(mu))
    h = {}

    def hk(k):
        if k not in h:
            h[k] = complete_homogeneous(k, N)
        return h[k]

    matrix = [[hk(lam[i] - mu[j] - i + j) for j in range(size)] for i in range(size)]
    return _determinant(matrix, N)


# ---------------------------------------------------------------------------
# Schur expansion


@dataclass(frozen=True)
class SchurExpansion:
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, m in self.terms:
            s = "s_(" + ",".join(map(str, lam)) + ")"
            parts.append(s if m == 1 else f"{m}*{s}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "multiplicity": str(m)} for lam, m in self.terms]


def is_symmetric(p: LaurentPolynomial) -> bool:
    for i in range(p.n_vars - 1):
        perm = list(range(1, p.n_vars + 1))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute_variables(perm) != p:
            return False
    return True


def schur_expand(p: LaurentPolynomial) -> SchurExpansion:
    """Write a symmetric polynomial as an integer combination of Schur polynomials."""
    if not p.is_polynomial():
        raise NotPolynomialError("input has negative exponents")
    if not is_symmetric(p):
        raise NotSymmetricError("input is not symmetric under variable swaps")
    N = p.n_vars
    rem = p
    out = []
    cache: dict[tuple[int, ...], LaurentPolynomial] = {}
    while not rem.is_zero():
        lead = max(rem.terms)
        c = rem.terms[lead]
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise NonDominantLeadingTermError(f"leading exponent {lead} is not a partition")
        if lead not in cache:
            cache[lead] = schur_polynomial(lead, N)
        rem = rem - cache[lead] * c
        out.append((lead, c))
    return SchurExpansion(tuple(out))
