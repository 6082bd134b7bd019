from fractions import Fraction

import pytest

from poch_verify.errors import UnknownIdentity
from poch_verify.registry import CONTROL_PREFIX, Kind, catalog, get, select, series_record, var

REQUIRED_IDS = [
    "poch.vandermonde.rising",
    "poch.vandermonde.falling",
    "poch.stirling.s1",
    "poch.stirling.srising",
    "poch.stirling.s2",
    "poch.lemma_ab.rozn",
    "poch.lemma_ab.rozn2",
    "poch.lemma_ab.rozn3",
    "jacobi.inverse.odwr",
    "jacobi.inverse.odw2",
    "jacobi.conn.compose",
    "jacobi.conn.inverse",
    "jacobi.conn.parity",
    "jacobi.conn.reflect",
    *(
        f"jacobi.ccon.{case}"
        for case in ("ebb", "oebb", "ea12", "oea12", "ea32", "oea32", "a12", "a32", "ab", "ba", "aabb")
    ),
    *(f"jacobi.upr.{name}" for name in ("x_y", "y_x", "i001", "i002", "dd1", "dd2", "aaababaa", "aabbbbaa")),
    "jacobi.density.expansion",
    "q.euler.finite_zero",
    "q.euler.binT",
    "q.euler.obinT",
    "q.euler.inf_zero",
    *(f"q.shift.{name}" for name in ("s1", "s2", "s3", "s4", "knk1", "knk2")),
    *(f"q.kernel.{name}" for name in ("rozklv", "rozklw", "rozkll")),
    *(f"qh.chebU.{name}" for name in ("fin1", "fin2", "inU", "nah", "x0", "galois")),
    "rogers.rogers.fin",
    "rogers.rogers.series",
    *(f"qh.rogers.{name}" for name in ("p1", "p2", "p3", "series1", "series2", "hC", "Ch", "simplified1")),
    "qh.rogers.simplified2",
    *(f"rogers.chebU.{name}" for name in ("fin1", "fin2", "series1", "series2", "nice")),
    *(f"asc.qh.{name}" for name in ("fin", "pm", "inv", "diag1", "diag2")),
    *(f"aw.asc.{name}" for name in ("fin1", "fin2", "series1", "series2", "c1", "c2", "a1", "a2")),
]


def test_catalog_is_large_sorted_and_unique():
    ids = [record.id for record in catalog()]
    assert len(ids) >= 60
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)


def test_catalog_contains_required_ids():
    ids = {record.id for record in catalog()}
    assert [identity for identity in REQUIRED_IDS if identity not in ids] == []


def test_exact_records_carry_degree_bounds():
    for record in catalog():
        if record.kind is Kind.EXACT and 0 < len(record.variables) <= 2:
            bounds = record.degree_bound(3)
            assert len(bounds) == len(record.variables)
            assert all(bound >= 0 for bound in bounds)


def test_series_records_carry_points_and_ratio():
    for record in catalog():
        if record.kind is Kind.SERIES:
            assert record.points
            for point in record.points:
                assert set(point) == set(record.variable_names)
                assert all(isinstance(value, Fraction) for value in point.values())


def test_get():
    assert get("poch.lemma_ab.rozn").kind is Kind.EXACT
    assert get("q.euler.inf_zero").kind is Kind.SERIES


def test_get_unknown():
    with pytest.raises(UnknownIdentity):
        get("zzz")
    with pytest.raises(KeyError):
        get("zzz")


def test_select_by_prefix():
    assert len(select("jacobi.upr.")) == 8
    assert select("zzz") == ()


def test_controls_only_on_request():
    assert all(not record.control for record in select(""))
    assert all(not record.control for record in select("jacobi.density."))
    controls = select(CONTROL_PREFIX)
    assert {record.id for record in controls} == {
        "registry.selftest.sabotaged",
        "registry.selftest.bn_literal",
        "registry.selftest.aw_norm_literal",
    }
    assert [record.id for record in select("jacobi.density.expansion.cd_ab")] == ["jacobi.density.expansion.cd_ab"]


def test_series_record_needs_points():
    with pytest.raises(ValueError):
        series_record("broken", "0 = 0", [var("q")], lambda p, ctx: 0, lambda p, ctx: iter(()), lambda p: 0, [])


def test_series_points_must_match_variables():
    with pytest.raises(ValueError):
        series_record("broken", "0 = 0", [var("q")], lambda p, ctx: 0, lambda p, ctx: iter(()), lambda p: 0, [{"t": 1}])
