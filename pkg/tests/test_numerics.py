from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poch_verify.errors import InvalidPrecisionContext, SampleSpaceExhausted, ZeroDenominator
from poch_verify.numerics import (
    EXACT_ZERO,
    PrecisionContext,
    RationalSampler,
    format_exact_residual,
    format_residual,
    geometric_terms,
    is_real,
    lift,
    one_like,
    rat,
    record_seed,
    sample_rationals,
    scalar,
    sum_until_converged,
    to_real,
)

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=20)


def test_rat_is_canonical():
    assert rat(2, 4) == Fraction(1, 2)
    assert rat(-3, 6) == Fraction(-1, 2)


def test_rat_zero_denominator():
    with pytest.raises(ZeroDenominator, match="zero denominator"):
        rat(1, 0)


@given(fractions, fractions, fractions)
def test_fraction_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    if b != 0:
        assert (a / b) * b == a


def test_scalar_and_one_like():
    assert scalar(3) == Fraction(3)
    assert scalar("1/3") == Fraction(1, 3)
    assert one_like(Fraction(2, 3)) == 1
    ctx = PrecisionContext()
    assert is_real(one_like(ctx.mp.mpf(5)))


def test_invalid_precision_context():
    with pytest.raises(InvalidPrecisionContext, match="invalid precision context"):
        PrecisionContext(precision_bits=32)
    with pytest.raises(InvalidPrecisionContext):
        PrecisionContext(max_terms=2)


def test_contexts_do_not_share_precision():
    low, high = PrecisionContext(precision_bits=64), PrecisionContext(precision_bits=256)
    assert low.mp.prec == 64
    assert high.mp.prec == 256
    third_high = to_real(Fraction(1, 3), high)
    assert abs(third_high * 3 - 1) < high.mp.ldexp(1, -250)
    assert to_real(Fraction(1, 3), low) != third_high


def test_to_real_rounds_once():
    ctx = PrecisionContext()
    assert to_real(Fraction(1, 2), ctx) == ctx.mp.mpf(1) / 2
    assert to_real(7, ctx) == 7


def test_lift_moves_fraction_into_real_context():
    ctx = PrecisionContext(precision_bits=128)
    like = ctx.mp.mpf(1)
    value = lift(Fraction(2, 5), like)
    assert is_real(value)
    assert value.context is ctx.mp
    assert lift(Fraction(2, 5), Fraction(1)) == Fraction(2, 5)


def test_tolerance():
    ctx = PrecisionContext(tolerance_exp=-10)
    assert ctx.tolerance == ctx.mp.mpf(1) / 1024


def test_record_seed_is_stable():
    assert record_seed("poch.vandermonde.rising", 42) == record_seed("poch.vandermonde.rising", 42)
    assert record_seed("poch.vandermonde.rising", 42) != record_seed("poch.vandermonde.falling", 42)
    assert record_seed("poch.vandermonde.rising", 42) != record_seed("poch.vandermonde.rising", 43)


def test_sampler_is_deterministic_and_distinct():
    first = sample_rationals(RationalSampler(seed=7), 30)
    second = sample_rationals(RationalSampler(seed=7), 30)
    assert first == second
    assert len(set(first)) == 30
    assert all(abs(value.numerator) <= 12 and value.denominator <= 8 for value in first)


def test_sampler_respects_exclusions():
    sampler = RationalSampler(seed=1).with_exclusions([lambda value: value <= 0])
    assert all(value > 0 for value in sampler.pool())


def test_sampler_widening_doubles_numerators():
    sampler = RationalSampler(seed=1, numerator_bound=1, denominator_bound=1)
    assert sorted(sampler.pool()) == [-1, 0, 1]
    assert sampler.widened().numerator_bound == 2
    assert len(sampler.widened().pool()) == 5


def test_sample_space_exhausted():
    with pytest.raises(SampleSpaceExhausted, match="sample space exhausted"):
        sample_rationals(RationalSampler(seed=1, numerator_bound=1, denominator_bound=1), 4)


def test_geometric_series_converges():
    ctx = PrecisionContext()

    def halves():
        term = ctx.mp.mpf(1)
        while True:
            yield term
            term /= 2

    outcome = sum_until_converged(ctx.mp.mpf(2), halves(), Fraction(1, 2), ctx)
    assert outcome.converged
    assert 80 < outcome.terms_used < 100
    assert outcome.residual < ctx.tolerance


def test_divergent_series_fails_with_trace():
    ctx = PrecisionContext(max_terms=50)

    def ones():
        while True:
            yield ctx.mp.mpf(1)

    outcome = sum_until_converged(ctx.mp.mpf(0), ones(), Fraction(1, 2), ctx)
    assert not outcome.converged
    assert outcome.terms_used == 50
    assert [n for n, _ in outcome.trace] == [1, 2, 5, 10, 20, 50]


def test_finite_series_has_no_tail():
    ctx = PrecisionContext()
    terms = [ctx.mp.mpf(1), ctx.mp.mpf(2)]
    outcome = sum_until_converged(ctx.mp.mpf(3), iter(terms), Fraction(9, 10), ctx)
    assert outcome.converged
    assert outcome.terms_used == 2


def test_residual_formatting():
    ctx = PrecisionContext()
    assert format_residual(0, ctx) == EXACT_ZERO
    assert format_residual(ctx.mp.ldexp(3, -84), ctx).endswith("(~2^-83, 256 bits)")
    assert format_exact_residual(Fraction(0)) == EXACT_ZERO
    assert format_exact_residual(Fraction(-1, 4)) == "0.25 (exact 1/4)"


def test_growing_terms_are_abandoned():
    ctx = PrecisionContext()

    def counting():
        n = 1
        while True:
            yield ctx.mp.mpf(n)
            n += 1

    outcome = sum_until_converged(ctx.mp.mpf(0), counting(), 0, ctx, abandon_window=10)
    assert not outcome.converged
    assert outcome.terms_used == 20
    assert sum_until_converged(ctx.mp.mpf(0), counting(), 0, ctx).terms_used == ctx.max_terms


def test_term_budget_override():
    ctx = PrecisionContext()

    def halves():
        term = ctx.mp.mpf(1)
        while True:
            yield term
            term /= 2

    outcome = sum_until_converged(ctx.mp.mpf(2), halves(), Fraction(1, 2), ctx, max_terms=5)
    assert not outcome.converged
    assert outcome.terms_used == 5


def test_geometric_terms():
    ctx = PrecisionContext()
    # 80 / log2(10/9) = 526.3
    assert geometric_terms(Fraction(9, 10), ctx) == 527
    assert geometric_terms(Fraction(-9, 10), ctx) == 527
    assert geometric_terms(0, ctx) == ctx.max_terms
    assert geometric_terms(1, ctx) == ctx.max_terms
