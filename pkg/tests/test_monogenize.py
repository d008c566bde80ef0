import random
from dataclasses import replace

import pytest

from conftest import SEED, random_generator
from monogen.forms import QuarticGenerator
from monogen.monogenize import (
    PipelineConfig,
    bound_diagnostics,
    canonicalize,
    compare_with_oracle,
    enumerate_monogenizations,
    search_system,
    verify_monogenizer,
)
from monogen.forms import quadratic_pair
from monogen.oracle import oracle_system

CYCLO = QuarticGenerator(1, 1, 1, 1)
LIGHT = PipelineConfig(cubic_height=2000, quartic_height=300)


@pytest.fixture(scope="module")
def cyclo_report():
    return enumerate_monogenizations(CYCLO, LIGHT)


def test_canonicalize_examples():
    assert canonicalize(-1, -1, -1) == (1, 1, 1)
    assert canonicalize(0, -2, 1) == (0, 2, -1)
    assert canonicalize(1, 0, 0) == (1, 0, 0)
    with pytest.raises(ValueError):
        canonicalize(0, 0, 0)


def test_verify_examples():
    assert verify_monogenizer(CYCLO, 1, 0, 0)
    assert not verify_monogenizer(CYCLO, 0, 0, 0)
    assert verify_monogenizer(CYCLO, 0, 1, 0)


def test_cyclotomic_generators(cyclo_report):
    assert {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)} <= set(cyclo_report.classes)
    assert all(t.verified for b in cyclo_report.branches for t in b.triples)
    assert cyclo_report.bounds["pass"]


def test_pure_quartic_classes():
    report = enumerate_monogenizations(QuarticGenerator(0, 0, 0, -2), LIGHT)
    assert report.resolvent == (1, 0, 8, 0)
    assert report.cubic_solutions == ((1, 0),)
    # xi on Q1 = 1; xi +- xi^2 + xi^3 on the other sign, Q1 = -1.
    assert set(report.classes) == {(1, 0, 0), (1, 1, 1), (1, -1, 1)}
    assert {s.rhs for s in report.branches[0].quartic_solutions} == {1, -1}


def test_trivial_branch_triples_all_verify():
    rng = random.Random(SEED)
    for _ in range(8):
        report = enumerate_monogenizations(random_generator(rng, 8), LIGHT)
        trivial = next(b for b in report.branches if (b.u, b.v) == (1, 0))
        assert trivial.quartic_solutions
        assert all(t.verified for t in trivial.triples)
        assert not any("unverified" in d for d in trivial.discrepancies)


def test_pipeline_matches_oracle_on_random_generators():
    rng = random.Random(SEED + 1)
    cfg = replace(LIGHT, oracle_box=8)
    for _ in range(12):
        P = random_generator(rng, 6)
        report = enumerate_monogenizations(P, cfg)
        cmp = compare_with_oracle(P, report.classes, 8)
        assert cmp.agree, (P, cmp)
        assert report.bounds["pass"]
        assert not any(b.fallback_used for b in report.branches)


def test_system_search_matches_oracle_system():
    pair = quadratic_pair(CYCLO)
    for u0, v0 in ((1, 0), (1, 1), (-1, -1)):
        assert search_system(pair, u0, v0, 6) == oracle_system(pair, u0, v0, 6)


def test_oracle_mode_records_no_discrepancy_on_cyclotomic():
    report = enumerate_monogenizations(CYCLO, replace(LIGHT, oracle_enabled=True, oracle_box=8))
    assert report.oracle is not None and report.oracle.agree
    assert not any(b.discrepancies for b in report.branches)


def test_tiny_quartic_height_misses_large_solutions():
    P = QuarticGenerator(0, 0, -1, -1)
    report = enumerate_monogenizations(P, replace(LIGHT, quartic_height=1))
    cmp = compare_with_oracle(P, report.classes, 10)
    assert set(cmp.missing_from_pipeline) == {(1, -2, 0), (2, -3, 4), (6, 5, 4)}


def test_literal_construction_is_reported():
    report = enumerate_monogenizations(CYCLO, replace(LIGHT, compare_literal=True))
    branch = next(b for b in report.branches if (b.u, b.v) == (1, 1))
    # Here Q1' = Q2, which vanishes on the whole trivial parametrization.
    assert branch.literal is not None
    assert branch.literal.quartic == (0, 0, 0, 0, 0)
    assert branch.literal.system_hits == 0
    p_report = enumerate_monogenizations(
        QuarticGenerator(0, 0, -1, -1), replace(LIGHT, compare_literal=True)
    )
    for b in p_report.branches:
        if (b.u, b.v) != (1, 0):
            assert b.literal is not None and b.literal.system_hits <= b.literal.solutions


def test_bound_diagnostics_flags_too_many_cubic_classes(cyclo_report):
    fake = replace(cyclo_report, cubic_solutions=tuple((k, 1) for k in range(11)))
    diag = bound_diagnostics(fake)
    assert not diag["pass"]
    assert any("cubic classes 11" in f for f in diag["failures"])


def test_bound_constants(cyclo_report):
    b = cyclo_report.bounds
    assert (b["cubic_max"], b["quartic_max"], b["total_max"]) == (10, 276, 2760)
    assert b["informational"]["total_max_negative_disc"] == 70


def test_config_validation():
    with pytest.raises(ValueError):
        PipelineConfig(cubic_height=0)
    with pytest.raises(ValueError):
        PipelineConfig(oracle_box=True)
