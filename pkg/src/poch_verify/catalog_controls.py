"""Negative controls: records that must fail, to show the engines can fail.

They only run when the id filter asks for them (see `registry.select`).
"""
from typing import List

from poch_verify.awfamilies import aw_alpha_norm_literal, bpoly_literal_eval
from poch_verify.catalog_families import AW_RECIPROCAL_ANCHOR, asc_zero_sum, aw_reciprocal_terms
from poch_verify.catalog_families import records as family_records
from poch_verify.catalog_poch import rozn_rhs, rozn_sum, square
from poch_verify.registry import CONTROL_PREFIX, IdentityRecord, exact_record, series_record, var


def records() -> List[IdentityRecord]:
    families = {record.id: record for record in family_records()}
    zero_sum, series = families["asc.qh.fin"], families["aw.asc.series2"]
    return [
        exact_record(
            f"{CONTROL_PREFIX}.sabotaged",
            "sum_j (-1)^j C(n,j) (a)^(j) (b+j)^(n-j) = (b-a)^(n) + 1",
            [var("a"), var("b")],
            rozn_sum,
            lambda n, p: rozn_rhs(n, p) + 1,
            square,
            control=True,
        ),
        exact_record(
            f"{CONTROL_PREFIX}.bn_literal",
            "sum_j [n j]_q h_j(y|q) b_{n-j}(y|q) = 0 with b_n = (-1)^n q^C(n,2) h_n(y|q)",
            zero_sum.variables,
            asc_zero_sum(bpoly_literal_eval),
            zero_sum.rhs,
            zero_sum.degree_bound,
            control=True,
        ),
        series_record(
            f"{CONTROL_PREFIX}.aw_norm_literal",
            f"{AW_RECIPROCAL_ANCHOR}, with the displayed squared norm of alpha_n",
            series.variables,
            series.lhs,
            aw_reciprocal_terms(aw_alpha_norm_literal),
            series.ratio,
            series.points,
            domain=series.domain,
            control=True,
        ),
    ]
