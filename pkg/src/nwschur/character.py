"""Characters of Schur and Weyl modules of northwest diagrams.

The characters are sums over the standard tabloids of the blowup, one
rational term per tabloid, evaluated exactly by
:func:`~nwschur.polynomial.sum_rational_terms`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import (
    Diagram,
    blowup,
    complement_in_rectangle,
    is_blowup_closed,
    is_northwest,
    lex_sort,
    northwest_rearrangement,
)
from .exceptions import BlowupNotClosedError, NotNorthwestError, PreconditionError
from .polynomial import (
    FixedPointTerm,
    LaurentPolynomial,
    SignConvention,
    evaluate_at_ones,
    invert_variables,
    sum_rational_terms,
)
from .tabloid import fixed_points


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("NWSCHUR_THREADS", "1")))
    except ValueError:
        return 1


def _prepare(D: Diagram, N: int | None) -> tuple[Diagram, int]:
    N = D.n_rows if N is None else N
    if D.max_row > N:
        raise PreconditionError(f"diagram uses row {D.max_row} but N={N}")
    D = lex_sort(D).with_rows(max(N, 1))
    if not is_northwest(D):
        raise NotNorthwestError(
            "diagram is not northwest (even after sorting its columns lexicographically)"
        )
    return D, N


def fixed_point_terms(D: Diagram, N: int | None = None) -> list[FixedPointTerm]:
    D, N = _prepare(D, N)
    return [FixedPointTerm(data.weight, data.d) for _, data in fixed_points(D, N)]


def _character(D: Diagram, N: int | None, form: SignConvention, workers: int | None) -> LaurentPolynomial:
    D, N = _prepare(D, N)
    terms = [FixedPointTerm(data.weight, data.d) for _, data in fixed_points(D, N)]
    workers = default_workers() if workers is None else workers
    return sum_rational_terms(terms, form, n_vars=N, workers=workers)


def weyl_character(D: Diagram, N: int | None = None, workers: int | None = None) -> LaurentPolynomial:
    """Character of the Weyl module ``W_D`` of ``GL(N)``."""
    return _character(D, N, SignConvention.W, workers)


def schur_character(D: Diagram, N: int | None = None, workers: int | None = None) -> LaurentPolynomial:
    """Character of the Schur module ``S_D`` of ``GL(N)`` (characteristic zero)."""
    return _character(D, N, SignConvention.S, workers)


def module_dimension(D: Diagram, N: int | None = None) -> int:
    return evaluate_at_ones(schur_character(D, N))


def determinant_power(N: int, r: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial([r] * N)


@dataclass(frozen=True)
class DualityReport:
    holds: bool
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    complement: Diagram
    row_permutation: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "complement": self.complement.to_json(),
            "complement_row_permutation": (
                list(self.row_permutation) if self.row_permutation is not None else None
            ),
        }


def check_complement_duality(D: Diagram, N: int, r: int) -> DualityReport:
    """Compare ``char S_{D'}`` with ``det^r * char S_D(x^-1)``.

    ``D'`` is the complement of ``D`` in the ``N`` x ``r`` rectangle. If
    ``D'`` only becomes northwest after relabelling rows, the relabelling
    is reported in ``row_permutation`` (``None`` when none was needed); the
    character itself is unchanged by it.
    """
    _prepare(D, N)
    comp = complement_in_rectangle(D, N, r)
    perm = None
    target = lex_sort(comp)
    if not is_northwest(target):
        found = northwest_rearrangement(comp)
        if found is None:
            raise NotNorthwestError(
                "complement is not northwest under any row or column permutation"
            )
        perm, target = found
    lhs = schur_character(target, N)
    rhs = invert_variables(schur_character(D, N)).shift([r] * N)
    return DualityReport(lhs == rhs, lhs, rhs, comp, perm)


def poincare_polynomial(D: Diagram, N: int | None = None) -> LaurentPolynomial:
    """``sum_t q^(2 d_plus(t))`` over the standard tabloids, as a polynomial in ``q``.

    Requires the diagram to be closed under column intersections.
    """
    D, N = _prepare(D, N)
    if not is_blowup_closed(D):
        raise BlowupNotClosedError("diagram is not closed under column intersections")
    counts: dict[tuple[int], int] = {}
    for _, data in fixed_points(D, N):
        key = (2 * data.d_plus,)
        counts[key] = counts.get(key, 0) + 1
    return LaurentPolynomial(counts, 1)


def betti_numbers(poincare: LaurentPolynomial) -> list[int]:
    top = max((e[0] for e in poincare.terms), default=-1)
    return [poincare.coefficient((k,)) for k in range(top + 1)]
