"""Acceptance gate. Each criterion prints one ``PASS``/``FAIL`` line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py`` for a compact report.
"""

import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import gaussian_binomial, inversions, northwest_classes, partitions, random_northwest  # noqa: E402
from nwschur.character import check_complement_duality, fixed_point_terms, poincare_polynomial, schur_character  # noqa: E402
from nwschur.diagram import Diagram, complement_in_rectangle, is_northwest, lex_sort, northwest_rearrangement, skew_diagram, young_diagram  # noqa: E402
from nwschur.exceptions import NonExactDivision  # noqa: E402
from nwschur.oracle import tensor_schur_character  # noqa: E402
from nwschur.permutation import monotone_sequence  # noqa: E402
from nwschur.polynomial import (  # noqa: E402
    FixedPointTerm,
    SignConvention,
    evaluate_at_ones,
    invert_variables,
    schur_expand,
    schur_polynomial,
    skew_schur_polynomial,
    sum_rational_terms,
)
from nwschur.tabloid import Tabloid, fixed_point_data, fixed_points  # noqa: E402

EXAMPLE = Diagram([[1], [1, 2], [2]], 3)

# collected by conftest.py into the terminal summary
RESULTS: list[str] = []


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return line


def skew_shapes():
    """Twenty skew shapes with at most three rows: four of each size 2..6."""
    by_size = {k: [] for k in range(2, 7)}
    for n in range(2, 10):
        for lam in partitions(n):
            if len(lam) > 3:
                continue
            for m in range(1, n):
                for mu in partitions(m):
                    if len(mu) <= len(lam) and all(a <= b for a, b in zip(mu, lam)) and n - m in by_size:
                        by_size[n - m].append((lam, mu))
    out = []
    for shapes in by_size.values():
        out += [shapes[int(k * len(shapes) / 4)] for k in range(4)]
    return out


def duality_cases():
    """Twenty northwest diagrams in N x r rectangles whose complements are
    northwest up to a row and column permutation, including relabelled ones."""
    plain, relabelled = [], []
    for N in (1, 2, 3):
        subsets = [c for k in range(1, N + 1) for c in itertools.combinations(range(1, N + 1), k)]
        for r in (1, 2, 3):
            for m in range(1, r + 1):
                for cols in itertools.combinations_with_replacement(subsets, m):
                    D = lex_sort(Diagram(cols, N))
                    if not is_northwest(D):
                        continue
                    comp = complement_in_rectangle(D, N, r)
                    if is_northwest(lex_sort(comp)):
                        plain.append((D, N, r))
                    elif northwest_rearrangement(comp) is not None:
                        relabelled.append((D, N, r))
    pick = lambda xs, k: [xs[int(i * len(xs) / k)] for i in range(k)]  # noqa: E731
    return pick(plain, 14) + pick(relabelled, 6)


def test_criterion_1_worked_example():
    start = time.perf_counter()
    ch = schur_character(EXAMPLE, 3)
    expansion = schur_expand(ch).as_dict()
    dim = evaluate_at_ones(ch)
    pts = fixed_points(EXAMPLE, 3)
    cols = ((1,), (1, 2), (2,))
    t1 = fixed_point_data(Tabloid(cols, ((1,), (1, 2), (2,))), EXAMPLE, 3).d
    t2 = fixed_point_data(Tabloid(cols, ((1,), (1, 2), (1,))), EXAMPLE, 3).d
    elapsed = time.perf_counter() - start
    ok = (
        expansion == {(3, 1, 0): 1, (2, 2, 0): 1}
        and dim == 21
        and len(pts) == 12
        and t1 == ((0, 1, 1), (1, 0, 1), (0, 0, 0))
        and t2 == ((0, 2, 1), (0, 0, 1), (0, 0, 0))
        and elapsed < 1.0
    )
    report(1, "worked example s_(3,1,0)+s_(2,2,0), dim 21, 12 tabloids", ok, f"{elapsed:.3f}s")
    assert ok


def test_criterion_2_young_diagrams():
    start = time.perf_counter()
    failures = []
    count = 0
    for N in (2, 3, 4):
        for n in range(0, 6):
            for lam in partitions(n):
                if len(lam) > N:
                    continue
                count += 1
                if schur_character(young_diagram(lam, N), N) != schur_polynomial(lam, N):
                    failures.append((lam, N))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30
    report(2, f"Young diagrams match Schur polynomials ({count} cases)", ok, f"{elapsed:.2f}s")
    assert ok, failures


def test_criterion_3_skew_shapes():
    start = time.perf_counter()
    shapes = skew_shapes()
    failures = [
        (lam, mu)
        for lam, mu in shapes
        if schur_character(skew_diagram(lam, mu, 3), 3) != skew_schur_polynomial(lam, mu, 3)
    ]
    elapsed = time.perf_counter() - start
    ok = len(shapes) == 20 and not failures and elapsed < 60
    report(3, "20 skew shapes match Jacobi-Trudi", ok, f"{elapsed:.2f}s")
    assert ok, failures


def test_criterion_4_oracle_equivalence():
    start = time.perf_counter()
    classes = northwest_classes(5, 3)
    failures = [D.columns for D in classes if tensor_schur_character(D, 3) != schur_character(D, 3)]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 600
    report(4, f"oracle equals formula on all {len(classes)} northwest classes", ok, f"{elapsed:.2f}s")
    assert ok, failures


def test_criterion_5_duality():
    cases = duality_cases()
    failures = []
    for D, N, r in cases:
        rep = check_complement_duality(D, N, r)
        if not rep.holds:
            failures.append((D.columns, N, r))
    ok = len(cases) == 20 and not failures
    report(5, "rectangle-complement duality on 20 diagrams", ok)
    assert ok, failures


def test_criterion_6_poincare():
    mismatches = []
    for N in range(1, 6):
        for k in range(1, N + 1):
            P = poincare_polynomial(Diagram([range(1, k + 1)], N), N)
            if P.terms != {(2 * p,): c for p, c in gaussian_binomial(N, k).items()}:
                mismatches.append((k, N))
    flags = poincare_polynomial(Diagram([[1], [1, 2], [1, 2, 3]], 3), 3)
    expected = {}
    for w in itertools.permutations((1, 2, 3)):
        key = (2 * inversions(w),)
        expected[key] = expected.get(key, 0) + 1
    ok = not mismatches and flags.terms == expected
    report(6, "Grassmannian and flag Poincare polynomials", ok)
    assert ok, mismatches


def test_criterion_7_monotone_sequences():
    rng = random.Random(2024)
    alpha_failures, beta_failures = [], []
    for _ in range(200):
        D = random_northwest(rng, max_rows=6, max_cols=6)
        N = D.n_rows
        prev = tuple(range(1, N + 1))
        for col, u in zip(D.columns, monotone_sequence(D, N)):
            cur = u.images
            inv_prev = {v: k for k, v in enumerate(prev, 1)}
            step = tuple(inv_prev[cur[k]] for k in range(N))
            if inversions(cur) != inversions(prev) + inversions(step):
                alpha_failures.append(D.columns)
            if {cur[k] for k in range(len(col))} != set(col):
                beta_failures.append(D.columns)
            prev = cur
    alpha_diagrams = len(set(alpha_failures))
    ok = not alpha_failures and not beta_failures
    detail = f"alpha fails on {alpha_diagrams}/200 diagrams, beta fails on {len(set(beta_failures))}/200"
    report(7, "monotone sequences satisfy alpha and beta", ok, detail)
    assert not beta_failures, beta_failures[:3]
    assert not alpha_failures, f"alpha counterexamples: {sorted(set(alpha_failures))[:3]}"


def test_criterion_8_integrity():
    inputs = [(EXAMPLE, 3)]
    inputs += [(young_diagram(lam, N), N) for N in (2, 3, 4) for n in range(6) for lam in partitions(n) if len(lam) <= N]
    inputs += [(skew_diagram(lam, mu, 3), 3) for lam, mu in skew_shapes()]
    inputs += [(D, 3) for D in northwest_classes(5, 3)]
    for D, N, r in duality_cases():
        inputs.append((D, N))
        comp = complement_in_rectangle(D, N, r)
        found = northwest_rearrangement(comp)
        if found is not None:
            inputs.append((found[1], N))
    raised = []
    for D, N in inputs:
        try:
            sum_rational_terms(fixed_point_terms(D, N), SignConvention.S, n_vars=N)
        except NonExactDivision:
            raised.append(D.columns)

    terms = fixed_point_terms(EXAMPLE, 3)
    corrupted = 0
    for (i, j) in [(0, 1), (1, 0), (0, 2)]:
        d = [list(row) for row in terms[0].denominator_exponents]
        d[i][j] += 1
        bad = [FixedPointTerm(terms[0].numerator_weight, tuple(map(tuple, d)))] + terms[1:]
        try:
            sum_rational_terms(bad, SignConvention.S)
        except NonExactDivision:
            corrupted += 1
    ok = not raised and corrupted == 3
    report(8, f"exact division on {len(inputs)} valid inputs, corrupted d_ij detected", ok)
    assert ok, raised


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-c", str(Path(__file__).parents[1] / "pyproject.toml")]))
