"""Seeded propagation solver against independently brute-forced oracles."""

from itertools import product

from fusioncat.exactnum import FieldScalar
from fusioncat.fsymbols import all_ones_table, build_h3_table
from fusioncat.fusionring import FKey, builtin_ring, enumerate_fkeys
from fusioncat.pentagon import _raw_instances, verify_all
from fusioncat.solver import (PartialTable, compare_to_dataset, propagate,
                              seed, solve)


def _pentagon_holds(ring, values: dict[FKey, FieldScalar]) -> bool:
    """Direct dict-based residual check with early exit (oracle path)."""
    for x, y, z, w, u, a, b, c, d, esum in _raw_instances(ring):
        lhs = values[FKey(x, y, c, u, d, a)] * values[FKey(a, z, w, u, c, b)]
        for t in esum:
            lhs = lhs - (values[FKey(y, z, w, d, c, t)]
                         * values[FKey(x, t, w, u, d, b)]
                         * values[FKey(x, y, z, b, t, a)])
        if not lhs.is_zero():
            return False
    return True


def _orthogonal_blocks(ring, block_keys, atoms):
    """All orthogonal fillings of a 2x2 block from the candidate atoms."""
    out = []
    one = ring.tower.one()
    for cells in product(atoms, repeat=4):
        a, b, c, d = cells
        if ((a * a + b * b) == one and (c * c + d * d) == one
                and (a * c + b * d).is_zero()
                and (a * a + c * c) == one and (b * b + d * d) == one
                and (a * b + c * d).is_zero()):
            out.append(dict(zip(block_keys, cells)))
    return out


def _oracle_tables(name, atoms_for_block):
    """Brute-force solutions: unit entries 1, one-dim entries +-1, the 2x2
    block orthogonal over the candidate atoms, filtered by the pentagon."""
    ring = builtin_ring(name)
    one = ring.tower.one()
    keys = enumerate_fkeys(ring)
    unit_keys = [k for k in keys if ring.unit in (k.a, k.b, k.c)]
    rest = [k for k in keys if k not in unit_keys]
    blocks = {}
    singles = []
    for k in rest:
        if len(ring.e_labels(k.a, k.b, k.c, k.u)) == 2:
            blocks.setdefault((k.a, k.b, k.c, k.u), []).append(k)
        else:
            singles.append(k)
    assert len(blocks) == 1
    block_keys = sorted(next(iter(blocks.values())), key=lambda k: k.sort_key)
    solutions = []
    for block in _orthogonal_blocks(ring, block_keys, atoms_for_block):
        for signs in product((one, -one), repeat=len(singles)):
            values = {k: one for k in unit_keys}
            values.update(block)
            values.update(zip(singles, signs))
            if _pentagon_holds(ring, values):
                solutions.append(values)
    return ring, solutions


def _fingerprint(values):
    return tuple(values[k].coords for k in sorted(values, key=lambda k: k.sort_key))


def test_seed_counts():
    z3 = builtin_ring("z3_pointed")
    assert len(seed(z3).known) == 27
    fib = builtin_ring("fibonacci")
    assert len(seed(fib).known) == 10
    h3 = builtin_ring("h3")
    assert len(seed(h3).known) == 173


def test_z3_seeding_is_complete():
    z3 = builtin_ring("z3_pointed")
    state, report = propagate(seed(z3))
    assert report.remaining == 0
    assert report.rounds == []
    tables = solve("z3_pointed")
    assert any(t == all_ones_table(z3) for t in tables)


def test_propagation_is_monotone_and_deterministic():
    fib = builtin_ring("fibonacci")
    first_state, first = propagate(seed(fib))
    second_state, second = propagate(seed(fib))
    assert first.render() == second.render()
    assert set(seed(fib).known) <= set(first_state.known)
    assert first_state.known == second_state.known


def test_fibonacci_matches_oracle():
    fib = builtin_ring("fibonacci")
    phi = (fib.tower.gen(0) + 1) / 2
    sqrt_phi = fib.tower.gen(1)
    atoms = [fib.tower.zero(), fib.tower.one(), -fib.tower.one(),
             phi.inverse(), -phi.inverse(),
             sqrt_phi.inverse(), -sqrt_phi.inverse()]
    ring, oracle = _oracle_tables("fibonacci", atoms)
    assert len(oracle) == 2  # the golden block, up to the gauge sign
    solved = solve("fibonacci")
    assert len(solved) == 2
    oracle_prints = {_fingerprint(v) for v in oracle}
    solved_prints = {
        _fingerprint({k: v.as_field() for k, v in t.entries.items()})
        for t in solved}
    assert solved_prints == oracle_prints
    # the canonical representative: [[1/phi, 1/sqrt(phi)], [.., -1/phi]]
    canonical = next(t for t in solved
                     if t.get(("t", "t", "t", "t", "1", "t")).as_field().sign() > 0)
    m = canonical.f_matrix("t", "t", "t", "t")
    assert m[0][0].as_field() == phi.inverse()
    assert m[0][1].as_field() == sqrt_phi.inverse()
    assert m[1][0].as_field() == sqrt_phi.inverse()
    assert m[1][1].as_field() == -phi.inverse()


def test_ising_matches_oracle():
    ising = builtin_ring("ising")
    half_r2 = ising.tower.gen(0) / 2
    atoms = [ising.tower.zero(), ising.tower.one(), -ising.tower.one(),
             half_r2, -half_r2]
    ring, oracle = _oracle_tables("ising", atoms)
    solved = solve("ising")
    assert len(oracle) == len(solved) == 16
    oracle_prints = {_fingerprint(v) for v in oracle}
    solved_prints = {
        _fingerprint({k: v.as_field() for k, v in t.entries.items()})
        for t in solved}
    assert solved_prints == oracle_prints
    canonical = next(
        t for t in solved
        if all(v.as_field().sign() > 0 for v in
               [t.get(("s", "s", "s", "s", "1", "1")),
                t.get(("s", "s", "s", "s", "1", "p")),
                t.get(("s", "s", "s", "s", "p", "1"))]))
    m = canonical.f_matrix("s", "s", "s", "s")
    assert m[0][0].as_field() == half_r2
    assert m[1][1].as_field() == -half_r2
    assert canonical.get(("p", "s", "p", "s", "s", "s")).as_field() == -1
    assert canonical.get(("s", "p", "s", "p", "s", "s")).as_field() == -1


def test_solver_outputs_verify():
    for name in ("z3_pointed", "fibonacci", "ising"):
        for table in solve(name):
            assert verify_all(table, rule="vacuous").passed
            assert table.check_orthogonality().passed


def test_h3_seeds_agree_with_dataset():
    h3 = builtin_ring("h3")
    table = build_h3_table()
    state = seed(h3)
    report = compare_to_dataset(state, table)
    assert report.compared == 173
    assert report.all_exact
    # no pentagon instance over seeded entries alone may have a residual
    state2, prop = propagate(state, max_rounds=1)
    assert prop.contradiction is None


def test_compare_empty_partial_is_vacuous():
    h3 = builtin_ring("h3")
    report = compare_to_dataset(PartialTable(h3, {}), build_h3_table())
    assert report.compared == 0 and report.all_exact


def test_h3_propagation_report():
    h3 = builtin_ring("h3")
    state, report = propagate(seed(h3))
    assert report.contradiction is None
    assert report.seeds == 173
    assert report.remaining == 1431 - len(state.known)
    assert compare_to_dataset(state, build_h3_table()).all_exact
