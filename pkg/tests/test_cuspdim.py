import itertools
from fractions import Fraction
from math import gcd

import pytest

from cohomforms.arith import CycloNum
from cohomforms.chars import char_from_unit_values, char_kronecker
from cohomforms.cohomology import h1_plus_basis, make_context
from cohomforms.cuspdim import (
    build_cusp_data, cusp_form_dimension, cusp_signs, epsilon_eigenvalues, plus_dimension,
)
from oracles import (
    CUSP_REPS_12, CUSP_REPS_25, EPS_DELTA0_12, EPS_OF_25, EPS_PARTNER_12, EPS_SIGNS_12, T_NEXT_25,
    classical_cusp_dimension, cohen_oesterle_dimension, number_of_cusps,
)


def unit_generators(N):
    gens, span = [], {1 % N}
    for u in range(1, N):
        if gcd(u, N) == 1 and u not in span:
            gens.append(u)
            while True:
                nxt = span | {x * u % N for x in span}
                if nxt == span:
                    break
                span = nxt
    return gens


def characters(N, orders):
    gens = unit_generators(N)
    seen = set()
    for exps in itertools.product(*[[Fraction(e, o) for o in orders for e in range(o)]] * len(gens)):
        try:
            chi = char_from_unit_values(N, dict(zip(gens, exps)))
        except ValueError:
            continue
        if chi.angles not in seen:
            seen.add(chi.angles)
            yield chi


def as_int(v):
    if isinstance(v, CycloNum):
        assert v.is_rational()
        v = v.coeffs[0] if v.coeffs else 0
    assert Fraction(v).denominator == 1
    return int(v)


def test_golden_25():
    ctx = make_context(25, 4)
    data = build_cusp_data(ctx)
    assert [i + 1 for i in data.t_next] == T_NEXT_25
    assert [i + 1 for i in data.eps_of] == EPS_OF_25
    assert [i + 1 for i in data.reps] == CUSP_REPS_25
    assert plus_dimension(ctx) == 2 and cusp_form_dimension(ctx) == 5


def test_golden_12():
    ctx = make_context(12, 5, char_kronecker(12))
    data = build_cusp_data(ctx)
    assert [i + 1 for i in data.reps] == CUSP_REPS_12
    assert [data.eps_of[i] + 1 for i in data.reps] == EPS_PARTNER_12
    assert [tuple(data.eps_delta0[i]) for i in data.reps] == EPS_DELTA0_12
    assert cusp_signs(ctx, data) == EPS_SIGNS_12
    assert epsilon_eigenvalues(ctx, data) == EPS_SIGNS_12
    assert plus_dimension(ctx) == 3 and cusp_form_dimension(ctx) == 5


@pytest.mark.parametrize("N", range(1, 60))
def test_number_of_cusps(N):
    assert build_cusp_data(make_context(N, 2)).num_cusps == number_of_cusps(N)


@pytest.mark.parametrize("N", range(1, 36))
def test_trivial_character_against_classical_formula(N):
    for k in (2, 4, 6):
        assert cusp_form_dimension(make_context(N, k)) == classical_cusp_dimension(N, k)


def _check(N, ks, orders, max_size):
    for chi in characters(N, orders):
        for k in ks:
            ctx = make_context(N, k, chi)
            if ctx.dimW > max_size:
                continue
            expected = as_int(cohen_oesterle_dimension(N, k, chi))
            assert cusp_form_dimension(ctx) == expected, (N, k, chi.angles)


@pytest.mark.parametrize("N", range(2, 31))
def test_quadratic_characters_against_cohen_oesterle(N):
    _check(N, (2, 3, 4, 5), (2,), 200)


@pytest.mark.parametrize("N", [5, 7, 9, 13, 15, 16, 20, 21])
def test_higher_order_characters_against_cohen_oesterle(N):
    _check(N, (2, 3, 4), (3, 4, 6), 120)


def test_parity_kills_everything():
    for ctx in (make_context(12, 4, char_kronecker(12)), make_context(12, 5)):
        data = build_cusp_data(ctx)
        assert len(data.killed) == data.num_cusps
        assert h1_plus_basis(ctx).rows == 0 and cusp_form_dimension(ctx) == 0


def test_irregular_cusp_is_killed():
    # a nontrivial character on the T-orbit leaves a class with no boundary
    ctx = make_context(9, 3, char_from_unit_values(9, {2: Fraction(1, 6)}))
    data = build_cusp_data(ctx)
    assert data.killed and len(data.killed) < data.num_cusps
