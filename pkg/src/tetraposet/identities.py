"""Generating function identities verified by exact expansion.

Everything here reduces to the tournament generating function

    prod_{1 <= i < j <= n} (x_i + lambda x_j),

whose monomials record wins per player and total upsets. Four independent
summations expand to the same polynomial: one over alternating sign matrices
weighted by inversions and -1 entries, one over their staircase arrays
weighted by value counts, and one over sorted tournament arrays with their
row shuffles. A fifth, lambda-only identity checks the shuffle fibers
themselves, and a sixth matches the value-count sum at lambda = 1 against the
pairwise product directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb

from .arrays import (
    ASM_COLORS,
    SORTED_COLORS,
    StaircaseArray,
    enumerate_arrays,
    enumerate_row_shuffles,
)
from .bijections import Asm, array_to_asm
from .colors import Color, all_admissible_sets, format_colors
from .formulas import formula_count, formula_rank_gf, tournament_gf
from .polynomials import QPoly, SparsePoly, first_difference

SCHUR_COLORS = frozenset({Color.GREEN, Color.YELLOW, Color.ORANGE})

IDENTITY_NAMES = ("rr", "asm", "tsscpp", "tsscpp-count", "schur", "formulas")


@dataclass(frozen=True, eq=False)
class ArrayStats:
    """Local statistics of a staircase array.

    An equality is a cell matching its southwest neighbor, x_{i,j} =
    x_{i+1,j-1}; for tournament arrays these mark games won by the larger
    player. Counts are split by row (eq_row[i-1]), by diagonal d = i + j
    (eq_diag[d], with eq_diag[0] and eq_diag[1] always 0), and by row and
    value (eq_row_value[(i, k)]). value_counts[k] and row_value_counts[(i, k)]
    include the pinned first column. rise_drop_count is the number of cells
    strictly above their west neighbor and strictly below their southwest
    neighbor, which for alternating sign matrix arrays counts the -1 entries.
    """

    eq_total: int
    eq_row: tuple[int, ...]
    eq_diag: tuple[int, ...]
    eq_row_value: dict[tuple[int, int], int]
    value_counts: dict[int, int]
    row_value_counts: dict[tuple[int, int], int]
    rise_drop_count: int


def array_stats(x: StaircaseArray) -> ArrayStats:
    n = x.n
    rows = x.rows
    eq_row = [0] * n
    eq_diag = [0] * (n + 1)
    eq_row_value: dict[tuple[int, int], int] = {}
    value_counts: dict[int, int] = {}
    row_value_counts: dict[tuple[int, int], int] = {}
    rise_drop = 0
    for i, j, v in x.cells():
        value_counts[v] = value_counts.get(v, 0) + 1
        row_value_counts[(i, v)] = row_value_counts.get((i, v), 0) + 1
        if j >= 1 and i < n:
            sw = rows[i][j - 1]
            if v == sw:
                eq_row[i - 1] += 1
                eq_diag[i + j] += 1
                eq_row_value[(i, v)] = eq_row_value.get((i, v), 0) + 1
            if rows[i - 1][j - 1] < v < sw:
                rise_drop += 1
    return ArrayStats(
        eq_total=sum(eq_row),
        eq_row=tuple(eq_row),
        eq_diag=tuple(eq_diag),
        eq_row_value=eq_row_value,
        value_counts=value_counts,
        row_value_counts=row_value_counts,
        rise_drop_count=rise_drop,
    )


@dataclass(frozen=True)
class AsmStats:
    inversions: int
    neg_count: int


def asm_stats(a: Asm) -> AsmStats:
    """Inversions sum A_{ij} A_{kl} over i > k, j < l, plus the -1 count."""
    nonzero = [
        (i, j, v)
        for i, row in enumerate(a.rows)
        for j, v in enumerate(row)
        if v
    ]
    inv = 0
    for i, j, vi in nonzero:
        for k, l, vk in nonzero:
            if i > k and j < l:
                inv += vi * vk
    neg = sum(1 for _, _, v in nonzero if v == -1)
    return AsmStats(inversions=inv, neg_count=neg)


def _add_with_binomial(
    terms: dict, lam_base: int, xs: tuple, spread: int
) -> None:
    """Add (1+lambda)^spread * lambda^lam_base * x^xs into a term dict."""
    for m in range(spread + 1):
        key = (lam_base + m, xs)
        terms[key] = terms.get(key, 0) + comb(spread, m)


def robbins_rumsey_rhs(n: int, budget: int | None = None) -> SparsePoly:
    """Sum over alternating sign matrices A of
    lambda^(inv(A) - neg(A)) (1+lambda)^neg(A) prod_j x_j^(sum_i (n-i) A_{ij})."""
    terms: dict = {}
    for x in enumerate_arrays(n, ASM_COLORS, budget):
        a = array_to_asm(x)
        st = asm_stats(a)
        exps = [
            sum((n - i) * a.rows[i - 1][j] for i in range(1, n + 1))
            for j in range(n)
        ]
        xs = tuple((j + 1, e) for j, e in enumerate(exps) if e)
        _add_with_binomial(terms, st.inversions - st.neg_count, xs, st.neg_count)
    return SparsePoly(terms)


def asm_expansion_rhs(n: int, budget: int | None = None) -> SparsePoly:
    """Sum over Y_n({g,y,o,b}) of
    lambda^E (1+lambda)^N prod_k x_k^(C_k - 1)."""
    terms: dict = {}
    for x in enumerate_arrays(n, ASM_COLORS, budget):
        st = array_stats(x)
        xs = tuple(
            (k, st.value_counts[k] - 1)
            for k in range(1, n + 1)
            if st.value_counts.get(k, 0) > 1
        )
        _add_with_binomial(terms, st.eq_total, xs, st.rise_drop_count)
    return SparsePoly(terms)


def tsscpp_expansion_rhs(n: int, budget: int | None = None) -> SparsePoly:
    """Sum over sorted arrays alpha in Y_n({b,r,g,y}) and their row shuffles:

        lambda^E(alpha) prod_i x_i^(n-i-E_i(alpha))
                        sum_beta prod_d x_d^(eq on diagonal d of beta)

    Each shuffle beta is a tournament array; its wins for player v split into
    the diagonal-v equalities of beta plus the row-v slack of alpha, which is
    how the tournament product re-emerges.
    """
    terms: dict = {}
    for alpha in enumerate_arrays(n, SORTED_COLORS, budget):
        st = array_stats(alpha)
        outer = {i: n - i - st.eq_row[i - 1] for i in range(1, n)}
        for beta in enumerate_row_shuffles(alpha, budget):
            bst = array_stats(beta)
            exps = dict(outer)
            for d in range(2, n + 1):
                if bst.eq_diag[d]:
                    exps[d] = exps.get(d, 0) + bst.eq_diag[d]
            xs = tuple(sorted((k, e) for k, e in exps.items() if e))
            key = (st.eq_total, xs)
            terms[key] = terms.get(key, 0) + 1
    return SparsePoly(terms)


def tsscpp_lambda_count(n: int, budget: int | None = None) -> SparsePoly:
    """Sum over Y_n({b,r,g,y}) of lambda^E times the shuffle fiber size,
    written as prod_{1<=i<=k<=n-1} binomial(C_{i+1,k}, E_{i,k})."""
    terms: dict = {}
    for alpha in enumerate_arrays(n, SORTED_COLORS, budget):
        st = array_stats(alpha)
        fiber = 1
        for i in range(1, n):
            for k in range(i, n):
                fiber *= comb(
                    st.row_value_counts.get((i + 1, k), 0),
                    st.eq_row_value.get((i, k), 0),
                )
        key = (st.eq_total, ())
        terms[key] = terms.get(key, 0) + fiber
    return SparsePoly(terms)


def pairwise_product(n: int) -> SparsePoly:
    """prod_{i<j} (x_i + x_j): the lambda = 1 tournament product."""
    out = SparsePoly.constant(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (SparsePoly.x(i) + SparsePoly.x(j))
    return out


def schur_expansion_rhs(n: int, budget: int | None = None) -> SparsePoly:
    """Sum over Y_n({g,y,o}) of prod_k x_k^(C_k - 1)."""
    terms: dict = {}
    for x in enumerate_arrays(n, SCHUR_COLORS, budget):
        st = array_stats(x)
        xs = tuple(
            (k, st.value_counts[k] - 1)
            for k in range(1, n + 1)
            if st.value_counts.get(k, 0) > 1
        )
        key = (0, xs)
        terms[key] = terms.get(key, 0) + 1
    return SparsePoly(terms)


def verify_identity(name: str, n: int, budget: int | None = None) -> dict:
    """Expand both sides of a named identity and report the comparison."""
    t0 = time.perf_counter()
    if name == "rr":
        lhs = tournament_gf(n, budget)
        rhs = robbins_rumsey_rhs(n, budget)
    elif name == "asm":
        lhs = tournament_gf(n, budget)
        rhs = asm_expansion_rhs(n, budget)
    elif name == "tsscpp":
        lhs = tournament_gf(n, budget)
        rhs = tsscpp_expansion_rhs(n, budget)
    elif name == "tsscpp-count":
        lhs = (SparsePoly.constant(1) + SparsePoly.lam()) ** comb(n, 2)
        rhs = tsscpp_lambda_count(n, budget)
    elif name == "schur":
        lhs = pairwise_product(n)
        rhs = schur_expansion_rhs(n, budget)
    else:
        raise ValueError(f"unknown identity {name!r}")
    diff = first_difference(lhs, rhs)
    return {
        "identity": name,
        "n": n,
        "status": "ok" if diff is None else "mismatch",
        "first_diff_monomial": diff,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }


def verify_formulas(n: int) -> list[dict]:
    """Compare enumeration against every closed form, one report per check.

    Counts are compared for each admissible color set that has a product
    formula; rank generating functions are compared where a q-analogue
    exists. Sets without a formula are skipped.
    """
    from .counting import rank_gf
    from .poset import build

    poset = build(n)
    rows = []
    for colorset in all_admissible_sets():
        expected_count = formula_count(colorset, n)
        if expected_count is None:
            continue
        t0 = time.perf_counter()
        gf = rank_gf(poset.subposet(colorset))
        diff = first_difference(QPoly({0: gf(1)}), QPoly({0: expected_count}))
        rows.append(
            {
                "identity": f"formulas:{format_colors(colorset)}",
                "n": n,
                "status": "ok" if diff is None else "mismatch",
                "first_diff_monomial": diff,
                "elapsed_ms": int((time.perf_counter() - t0) * 1000),
            }
        )
        expected_gf = formula_rank_gf(colorset, n)
        if expected_gf is None:
            continue
        t0 = time.perf_counter()
        diff = first_difference(gf, expected_gf)
        rows.append(
            {
                "identity": f"formulas-q:{format_colors(colorset)}",
                "n": n,
                "status": "ok" if diff is None else "mismatch",
                "first_diff_monomial": diff,
                "elapsed_ms": int((time.perf_counter() - t0) * 1000),
            }
        )
    return rows
