"""Pentagon enumeration and the exact verification sweeps."""

import random
from fractions import Fraction
from itertools import islice

import pytest

from fusioncat.exactnum import named_constant
from fusioncat.fsymbols import GaugeAssignment, all_ones_table, build_h3_table
from fusioncat.fusionring import builtin_ring
from fusioncat.pentagon import (check_additional,
                                check_addtriv, check_seeds, check_triangle,
                                classify, count_instances,
                                enumerate_instances, find_failing_instance,
                                negate_entry, residual, verify_all)
from fusioncat.pentagon import _Kernel


@pytest.fixture(scope="module")
def table():
    return build_h3_table()


@pytest.fixture(scope="module")
def h3(table):
    return table.ring


def test_counts_per_ring():
    assert count_instances(builtin_ring("z3_pointed"))["total"] == 81
    assert count_instances(builtin_ring("fibonacci"))["total"] == 47
    h3_counts = count_instances(builtin_ring("h3"))
    assert h3_counts["total"] == 41391
    assert h3_counts["unit"] == 5369


def test_z3_internals_are_forced():
    z3 = builtin_ring("z3_pointed")
    for inst in enumerate_instances(z3):
        assert len(inst.e_sum) == 1
        # with invertible labels every internal label is the forced product
        assert z3.n(inst.x, inst.y, inst.a) == 1
        assert z3.n(inst.z, inst.w, inst.c) == 1


def test_enumeration_determinism(h3):
    first = list(islice(enumerate_instances(h3), 500))
    second = list(islice(enumerate_instances(h3), 500))
    assert first == second


def test_classification(h3):
    insts = enumerate_instances(h3)
    unit_inst = next(i for i in insts if i.x == h3.unit)
    assert classify(h3, unit_inst, "unit")
    assert not classify(h3, unit_inst, "vacuous")
    r = h3.label("r")
    rho_inst = next(i for i in enumerate_instances(h3)
                    if (i.x, i.y, i.z, i.w) == (r, r, r, r))
    assert not classify(h3, rho_inst, "unit")
    with pytest.raises(ValueError):
        classify(h3, rho_inst, "bogus")


def test_residual_examples(table, h3):
    rng = random.Random(3)
    insts = list(enumerate_instances(h3))
    for inst in rng.sample(insts, 40):
        assert residual(inst, table).is_zero()
    z3 = builtin_ring("z3_pointed")
    ones = all_ones_table(z3)
    for inst in enumerate_instances(z3):
        assert residual(inst, ones).is_zero()


def test_kernel_matches_reference_residual(table, h3):
    rng = random.Random(17)
    kernel = _Kernel(table)
    for inst in rng.sample(list(enumerate_instances(h3)), 40):
        tup = inst.labels + (inst.e_sum,)
        assert kernel.residual_scalar(tup) == residual(inst, table)


def test_verify_all_h3(table):
    report = verify_all(table)
    assert report.passed
    assert report.total == 41391
    assert report.trivial == 5369
    assert report.summary() == ("instances=41391 trivial=5369 "
                                "nontrivial=36022 failures=0")


def test_verify_parallel_matches_serial(table):
    serial = verify_all(table, jobs=1)
    parallel = verify_all(table, jobs=2)
    assert parallel.passed
    assert (parallel.total, parallel.trivial) == (serial.total, serial.trivial)


def test_mutation_produces_failures(table, h3):
    key = h3.key("r", "r", "r", "r", "ar", "r")
    mutated = negate_entry(table, key)
    inst = find_failing_instance(mutated, key)
    assert inst is not None
    bad = residual(inst, mutated)
    assert not bad.is_zero()
    report = verify_all(mutated)
    assert not report.passed
    assert "FAIL" in report.render()


def test_triangle(table):
    report = check_triangle(table)
    assert report.passed, str(report)
    z3 = builtin_ring("z3_pointed")
    assert check_triangle(all_ones_table(z3)).passed


def test_z3_all_ones_passes_every_check():
    ones = all_ones_table(builtin_ring("z3_pointed"))
    assert verify_all(ones, rule="vacuous").passed
    assert check_triangle(ones).passed
    assert check_additional(ones).passed
    assert ones.check_orthogonality().passed


def test_triangle_specific_products(table, h3):
    one = table.ring.tower.one()
    # F[r; 1 r r] * F[r; 1 r r] = 1  (x = z = r)
    v = table.get(("1", "r", "r", "r", "r", "r"))
    assert (v * v).as_field() == one
    # F[asr; 1 r ar] * F[r; 1 asr ar] = 1
    v1 = table.get(("1", "r", "ar", "asr", "asr", "r"))
    v2 = table.get(("1", "asr", "ar", "r", "r", "asr"))
    assert (v1 * v2).as_field() == one


def test_additional(table):
    report = check_additional(table)
    assert report.passed, str(report)
    assert report.checked == 41391


def test_addtriv(table, h3):
    report = check_addtriv(table)
    assert report.passed, str(report)
    # the identity is gauge dependent: re-gauging (r, r; r) must break it
    gauge = GaugeAssignment(h3).set("r", "r", "r", 2)
    assert not check_addtriv(table.apply_gauge(gauge)).passed
    with pytest.raises(ValueError):
        check_addtriv(all_ones_table(builtin_ring("z3_pointed")))


def test_seeds(table):
    report = check_seeds(table)
    assert report.passed, str(report)


def test_seed_values_examples(table, h3):
    one = table.ring.tower.one()
    assert table.get(("r", "r", "1", "r", "r", "r")).as_field() == one
    assert table.get(("r", "1", "r", "ar", "r", "r")).as_field() == one
    assert table.get(("r", "r", "r", "r", "r", "r")).as_field() == -named_constant("B")


def _random_gauge(ring, rng):
    gauge = GaugeAssignment(ring)
    for a in range(len(ring)):
        for b in range(len(ring)):
            for c in ring.fusion(a, b):
                gauge.set(a, b, c, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
    return gauge


def test_gauge_invariance_spot(table, h3):
    """A couple of random gauges here; the acceptance suite runs all 20."""
    rng = random.Random(2024)
    for _ in range(2):
        gauged = table.apply_gauge(_random_gauge(h3, rng))
        assert verify_all(gauged).passed
        assert check_triangle(gauged).passed
        assert check_additional(gauged).passed
