"""Suite-versus-oracle agreement, mutation sensitivity, grid sufficiency,
and cross-engine consistency with the generating-function catalog."""

import pytest

from bernkit.campaign import fe_params, suite_params
from bernkit.egf import check_functional_equation
from bernkit.identities import SUITE_IDS, mutation_slots, run_identity
from bernkit.oracle import oracle_verify

# Generating-function catalog entry <-> suite identity carrying the same
# coefficient-wise statement.
CROSS_ENGINE = {
    "FE-SUM": "sum",
    "FE-ALT": "alternating-sum",
    "FE-SUB": "subdivision-product",
    "FE-MONO": "monomial",
    "FE-DIFFX": "derivative",
    "FE-DIFFT": "recurrence",
    "FE-PROD": "product",
    "FE-XY": "two-point",
    "FE-G1": "tg1",
    "FE-G2": "tg2",
    "FE-G3": "tg5",
}


@pytest.mark.parametrize("identity_id", SUITE_IDS)
def test_oracle_agrees_on_clean_tuples(identity_id):
    for params in suite_params(identity_id, 10):
        report = run_identity(identity_id, params)
        assert report.passed, (identity_id, params)
        assert oracle_verify(identity_id, params) is True


@pytest.mark.parametrize("identity_id", SUITE_IDS)
def test_every_slot_flips_somewhere_and_oracle_tracks_it(identity_id):
    degree_cap = 12 if identity_id in ("sum", "alternating-sum") else 5
    seen_slots: dict[str, bool] = {}
    for params in suite_params(identity_id, degree_cap):
        for slot in mutation_slots(identity_id, params):
            suite_verdict = run_identity(identity_id, params, mutate=slot).passed
            oracle_verdict = oracle_verify(identity_id, params, mutate=slot)
            assert suite_verdict == oracle_verdict, (identity_id, params, slot)
            seen_slots[slot] = seen_slots.get(slot, False) or not suite_verdict
    # Bumping any single right-hand-side constant by one must be caught for
    # at least one parameter tuple.
    missed = [slot for slot, flipped in seen_slots.items() if not flipped]
    assert not missed, (identity_id, missed)


def test_grid_sufficiency_both_directions():
    # The tensor grid accepts the true identity and rejects a single bumped
    # coefficient, so grid equality is neither vacuous nor lossy.
    params = {"n": 4, "j": 2}
    assert run_identity("subdivision-trivariate", params).passed
    for slot in mutation_slots("subdivision-trivariate", params):
        assert not run_identity("subdivision-trivariate", params, mutate=slot).passed


def test_trivariate_margin_zero_still_decides():
    # The minimal grid (degree bound + 1 nodes per variable) already decides.
    assert run_identity("subdivision-trivariate", {"n": 3, "j": 1}, grid_margin=0).passed
    assert not run_identity(
        "subdivision-trivariate", {"n": 3, "j": 1}, mutate="scale", grid_margin=0
    ).passed


@pytest.mark.parametrize("fe_id,suite_id", sorted(CROSS_ENGINE.items()))
def test_cross_engine_verdicts_match(fe_id, suite_id):
    order = 16
    for params in fe_params(fe_id, 8):
        fe_report = check_functional_equation(fe_id, params, order)
        assert fe_report.passed, (fe_id, params)
    for params in suite_params(suite_id, 8):
        assert run_identity(suite_id, params).passed, (suite_id, params)


def test_oracle_rejects_unknown_identity():
    with pytest.raises(ValueError):
        oracle_verify("nonsense", {"n": 1})
