from dataclasses import replace
from fractions import Fraction

import pytest

from poch_verify.engine import verify_exact, verify_record, verify_series
from poch_verify.errors import KindMismatch, OutsideConvergenceDomain
from poch_verify.numerics import PrecisionContext, RationalSampler
from poch_verify.registry import Kind, exact_record, get, select, var
from poch_verify.storage import AggregateReport, Status

SAMPLER = RationalSampler(seed=42)
CTX = PrecisionContext()


def test_rozn_is_proved():
    report = verify_exact(get("poch.lemma_ab.rozn"), SAMPLER, 12)
    assert report.status == Status.PROVED_EXACT.value
    assert report.max_residual == "exact-zero"
    assert not report.probabilistic
    assert report.witness is None
    # an (n+2) x (n+2) grid per n
    assert report.points_tested == sum((n + 2) ** 2 for n in range(1, 13))


def test_sabotaged_control_fails_at_first_n():
    report = verify_exact(get("registry.selftest.sabotaged"), SAMPLER, 6)
    assert report.status == Status.FAILED.value
    assert report.witness["n"] == 1
    assert report.witness["component"] == 0
    assert set(report.witness["parameters"]) == {"a", "b"}
    assert report.max_residual == "1.0 (exact 1)"
    left, right = Fraction(report.witness["lhs"]), Fraction(report.witness["rhs"])
    assert right - left == 1


def test_literal_b_polynomials_fail_at_two():
    report = verify_exact(get("registry.selftest.bn_literal"), SAMPLER, 6)
    assert report.status == Status.FAILED.value
    assert report.witness["n"] == 2


def test_literal_aw_norm_fails():
    report = verify_series(get("registry.selftest.aw_norm_literal"), CTX)
    assert report.status == Status.FAILED.value
    assert report.witness["points"]


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        verify_exact(get("q.euler.inf_zero"), SAMPLER, 4)
    with pytest.raises(KindMismatch):
        verify_series(get("poch.lemma_ab.rozn"), CTX)


def test_parity_identity():
    report = verify_exact("jacobi.conn.parity", SAMPLER, 4)
    assert report.status == Status.PROVED_EXACT.value


def test_euler_zero_sum_passes():
    report = verify_series("q.euler.inf_zero", CTX)
    assert report.status == Status.PASSED_NUMERIC.value
    assert report.points_tested == 2
    assert 0 < report.terms_used <= CTX.max_terms


def test_poisson_mehler_passes():
    record = get("asc.qh.pm")
    report = verify_series(record, CTX)
    assert report.status == Status.PASSED_NUMERIC.value
    assert report.terms_used <= 100
    rho_zero = next(point for point in record.points if point["rho"] == 0)
    assert verify_series(record, CTX, rho_zero).terms_used == 1


def test_density_expansion_picks_coefficient_order():
    ctx = PrecisionContext(tolerance_exp=-60)
    report = verify_series(get("jacobi.density.expansion"), ctx)
    assert report.status == Status.PASSED_NUMERIC.value
    assert "ab_cd" in report.notes
    swapped = verify_series(get("jacobi.density.expansion.cd_ab"), ctx)
    assert swapped.status == Status.FAILED.value
    assert swapped.terms_used < ctx.max_terms


def test_mutated_right_side_fails():
    record = get("poch.vandermonde.rising")
    mutated = replace(record, rhs=lambda n, p: record.rhs(n, p) + (1 if n == 3 else 0))
    report = verify_exact(mutated, SAMPLER, 5)
    assert report.status == Status.FAILED.value
    assert report.witness["n"] == 3


def test_series_point_outside_domain():
    with pytest.raises(OutsideConvergenceDomain):
        verify_series(get("q.euler.inf_zero"), CTX, {"q": Fraction(3, 2)})


def test_series_point_needs_every_variable():
    with pytest.raises(ValueError):
        verify_series(get("q.euler.inf_zero"), CTX, {"t": Fraction(1, 2)})


def test_runs_are_deterministic():
    def run():
        reports = [verify_record(record, SAMPLER, CTX, 4) for record in select("poch.")]
        return AggregateReport.from_reports({"seed": 42}, reports).to_json(timings=False)

    assert run() == run()


def test_seed_changes_points_not_status():
    record = get("poch.lemma_ab.rozn2")
    first = verify_exact(record, RationalSampler(seed=1), 5)
    second = verify_exact(record, RationalSampler(seed=2), 5)
    assert first.seed != second.seed
    assert first.status == second.status == Status.PROVED_EXACT.value


def test_empty_selection():
    aggregate = AggregateReport.from_reports({}, [verify_record(r, SAMPLER, CTX, 4) for r in select("nonexistent.")])
    assert aggregate.status == "ok-empty"
    assert aggregate.summary.total == 0


@pytest.mark.parametrize("identity", [record.id for record in select("")])
def test_catalog_holds(identity):
    report = verify_record(get(identity), SAMPLER, CTX, 4)
    assert report.status != Status.FAILED.value, report.witness


@pytest.mark.parametrize("identity", [record.id for record in select("q.shift.") if record.kind is Kind.EXACT])
def test_shift_laws_reach_twelve(identity):
    report = verify_exact(identity, SAMPLER, 12)
    assert report.status == Status.PROVED_EXACT.value
    assert report.max_n == 12
    assert "capped" not in report.notes


def test_chebyshev_u_second_finite_sum():
    record = get("qh.chebU.fin2")
    assert all(record.lhs(m, {"q": Fraction(2, 7)}) == 0 for m in range(1, 6))
    assert verify_exact(record, SAMPLER, 6).status == Status.PROVED_EXACT.value


def test_cap_shows_in_report():
    record = replace(get("poch.vandermonde.rising"), max_n_cap=2)
    report = verify_exact(record, SAMPLER, 5)
    assert report.status == Status.PROVED_EXACT.value
    assert report.max_n == 2
    assert "n capped at 2" in report.notes
    assert verify_exact(record, SAMPLER, 2).notes == record.notes


def test_joint_samples_are_distinct():
    seen = []

    def zero(n, p):
        seen.append(tuple(sorted(p.items())))
        return 0

    record = exact_record("joint", "0 = 0", [var("x"), var("y"), var("z")], zero, lambda n, p: 0)
    small = RationalSampler(seed=3, numerator_bound=1, denominator_bound=1)
    report = verify_exact(record, small, 1, trials=27)
    assert report.status == Status.PROVED_EXACT.value
    assert report.probabilistic
    assert len(seen) == len(set(seen)) == 27
    assert verify_exact(record, small, 1, trials=28).status == Status.SKIPPED_SINGULAR.value


def test_euler_pair_near_the_edge():
    point = {"t": Fraction(4, 5), "q": Fraction(-1, 2)}
    assert point in get("q.euler.binT").points
    report = verify_series("q.euler.binT", CTX, point)
    assert report.status == Status.PASSED_NUMERIC.value
    assert report.terms_used > CTX.max_terms
    assert verify_series("q.euler.obinT", CTX, point).status == Status.PASSED_NUMERIC.value
