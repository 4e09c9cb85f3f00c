"""
End-to-end convergence studies of the three registered models, checked row
by row against the published tables (100 cells, reference solution on 1000
cells).
"""
import numpy as np
import pytest

from fvscaling.laws import get_model
from fvscaling.report import reproduce_table

# (beta_n, Err^n) for n = 1, 2, ...
PUBLISHED = {
    "advection-reaction": [
        (1.002503184, 1.982060143),
        (0.339221162, 1.541742664),
        (0.179658402, 1.019974552),
        (0.129557512, 0.649010090),
        (0.110674919, 0.473993487),
        (0.103359357, 0.410759385),
        (0.100687214, 0.390106220),
        (0.099806263, 0.384018730),
        (0.099548143, 0.382245425),
        (0.099480915, 0.381798718),
        (0.099465245, 0.381707333),
        (0.099461950, 0.381688495),
        (0.099461320, 0.381684971),
        (0.099461210, 0.381684368),
        (0.099461192, 0.381684274),
    ],
    "burgers": [
        (1.002089090, 0.049488757),
        (0.951721597, 0.031257750),
        (0.932017487, 0.028248110),
        (0.928935042, 0.027821698),
        (0.928586351, 0.027777618),
        (0.928557279, 0.027773939),
        (0.928555437, 0.027773699),
        (0.928555346, 0.027773687),
        (0.928555346, 0.027773687),
    ],
    "traffic": [
        (0.454545455, 0.177248859),
        (0.380818913, 0.072762354),
        (0.361848941, 0.043568247),
        (0.357488961, 0.036910457),
        (0.356703991, 0.035736574),
        (0.356593379, 0.035573617),
        (0.356580794, 0.035555224),
        (0.356579603, 0.035553489),
        (0.356579507, 0.035553349),
    ],
}

ITERATIONS = {"advection-reaction": (14, 16), "burgers": (8, 10), "traffic": (8, 10)}


@pytest.fixture(scope="module", params=sorted(PUBLISHED))
def study(request):
    return reproduce_table(get_model(request.param))


def _paired_rows(study):
    published = PUBLISHED[study.table.model_name]
    return list(zip(study.table.rows, published))


def test_converges(study):
    assert study.trace.converged
    assert study.trace.rows[-1].e_n <= study.trace.settings.tol


def test_iteration_count(study):
    low, high = ITERATIONS[study.table.model_name]
    assert low <= len(study.table.rows) <= high


def test_converged_iterate_matches_direct_solution(study):
    assert np.max(np.abs(study.trace.final_field.final.values - study.direct.values)) <= 1e-6


def test_final_gaining_coefficient(study):
    tol = 1e-3 if study.table.model_name == "traffic" else 1e-4
    assert study.table.rows[-1].tau == pytest.approx(1.0, abs=tol)


def test_errors_row_by_row(study):
    name = study.table.model_name
    rel = 0.01 if name == "advection-reaction" else 0.05
    for row, (_, err) in _paired_rows(study):
        assert row.err == pytest.approx(err, rel=rel), f"{name} row {row.n}"


def test_final_error_matches_last_published_row(study):
    name = study.table.model_name
    rel = 0.01 if name == "advection-reaction" else 0.05
    assert study.table.rows[-1].err == pytest.approx(PUBLISHED[name][-1][1], rel=rel)
    assert study.table.err_direct == pytest.approx(PUBLISHED[name][-1][1], rel=rel)


def test_advection_beta_row_by_row(study):
    if study.table.model_name != "advection-reaction":
        pytest.skip("closed-form reference only")
    first, *_ = PUBLISHED["advection-reaction"]
    assert study.table.rows[0].beta == pytest.approx(first[0], abs=5e-4)
    for row, (beta, _) in _paired_rows(study):
        assert row.beta == pytest.approx(beta, abs=1e-3), f"row {row.n}"


def test_burgers_final_beta(study):
    if study.table.model_name != "burgers":
        pytest.skip("burgers only")
    assert study.table.rows[-1].beta == pytest.approx(PUBLISHED["burgers"][-1][0], rel=1e-2)


def test_traffic_first_beta(study):
    if study.table.model_name != "traffic":
        pytest.skip("traffic only")
    assert study.table.rows[0].beta == pytest.approx(PUBLISHED["traffic"][0][0], abs=1e-6)


def test_beta_increments_shrink(study):
    increments = [row.e_n for row in study.trace.rows if row.n >= 4]
    assert all(later <= earlier for earlier, later in zip(increments, increments[1:]))
    assert all(row.e_n > 0 for row in study.trace.rows[1:-1])


def test_errors_settle_from_second_iterate(study):
    errors = [row.err for row in study.table.rows[1:]]
    assert all(later <= earlier * (1 + 1e-9) for earlier, later in zip(errors, errors[1:]))
