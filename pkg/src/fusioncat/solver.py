"""Seeded constraint propagation for pentagon systems at desk scale.

The solver seeds the theorem-forced entries (unit-label entries are 1; for
h3 additionally the all-rho diagonal entry -B plus the two gauge-fixed
square-pop relations), then repeats three exact steps until nothing moves:

  1. equations with a single unknown appearing linearly are solved;
  2. univariate equations of degree <= 2 are solved over the tower (two
     roots become a branch point, none a contradiction);
  3. small equations are row-reduced treating each unknown monomial as a
     formal variable, which turns pairs like {X - M, X^2 + M - 1} into
     univariate conclusions without any Groebner machinery.

Equations come from the pentagon instances, from the orthogonality of every
block (row/column dot products), and for h3 from the registered square-pop
constraints (valid in the data-set gauge only).  Branches are explored
depth-first; any equation with no unknowns and a nonzero constant kills its
branch.  Every completed table is re-verified with the independent pentagon
and orthogonality checkers before it is returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .exactnum import FieldScalar, ParamScalar, field_sqrt, named_constant, render_scalar
from .fsymbols import FSymbolTable
from .fusionring import FKey, FusionRing, builtin_ring, enumerate_fkeys, f_blocks
from .pentagon import _raw_instances, verify_all

Poly = dict[tuple[int, ...], FieldScalar]  # monomial (sorted unknown ids) -> coeff


@dataclass
class PartialTable:
    ring: FusionRing
    known: dict[FKey, FieldScalar]
    gauge_log: list[str] = field(default_factory=list)

    def copy(self) -> "PartialTable":
        return PartialTable(self.ring, dict(self.known), list(self.gauge_log))

    def as_table(self) -> FSymbolTable:
        entries = {k: ParamScalar.from_field(v) for k, v in self.known.items()}
        return FSymbolTable(self.ring, entries)


@dataclass
class SolveReport:
    ring: str
    seeds: int
    rounds: list[int] = field(default_factory=list)
    branch_decisions: list[str] = field(default_factory=list)
    branch_options: list = field(default_factory=list)
    remaining: int = 0
    contradiction: str | None = None
    duration: float = 0.0

    @property
    def resolved(self) -> int:
        return sum(self.rounds)

    def render(self) -> str:
        lines = [f"ring={self.ring} seeds={self.seeds}"]
        for i, n in enumerate(self.rounds, start=1):
            lines.append(f"round {i}: resolved {n}")
        for d in self.branch_decisions:
            lines.append(f"branch: {d}")
        lines.append(f"resolved={self.resolved} remaining={self.remaining}")
        if self.contradiction:
            lines.append(f"contradiction: {self.contradiction}")
        return "\n".join(lines)


def seed(ring: FusionRing) -> PartialTable:
    """Theorem-forced initial assignments in the data-set gauge."""
    one = ring.tower.one()
    known: dict[FKey, FieldScalar] = {}
    log: list[str] = []
    keys = enumerate_fkeys(ring)
    if ring.is_pointed():
        for k in keys:
            known[k] = one
        log.append("pointed ring: trivial cocycle gauge, every entry 1")
    else:
        for k in keys:
            if ring.unit in (k.a, k.b, k.c):
                known[k] = one
        log.append("unit-label vertices normalized: unit-label entries set to 1")
    if ring.name == "h3":
        r = ring.label("r")
        known[FKey(r, r, r, r, r, r)] = -named_constant("B")
        log.append("all-rho diagonal entry fixed to -B (skein triangle value)")
        log.append("square-pop relations registered (data-set gauge)")
    return PartialTable(ring, known, log)


# ---------------------------------------------------------------------------
# polynomial plumbing

def _poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for m, c in q.items():
        if m in out:
            s = out[m] + c
            if s.is_zero():
                del out[m]
            else:
                out[m] = s
        else:
            out[m] = c
    return out


def _poly_scale(p: Poly, c: FieldScalar) -> Poly:
    if c.is_zero():
        return {}
    return {m: v * c for m, v in p.items()}


def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            c = c1 * c2
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            elif not c.is_zero():
                out[m] = c
    return out


class _System:
    """Equations of one propagation round, folded over the current knowns."""

    def __init__(self, partial: PartialTable, registered, max_unknowns: int = 4):
        self.ring = partial.ring
        self.known = partial.known
        self.max_unknowns = max_unknowns
        self.unknown_ids: dict[FKey, int] = {}
        self.unknown_keys: list[FKey] = []
        for k in enumerate_fkeys(self.ring):
            if k not in self.known:
                self.unknown_ids[k] = len(self.unknown_keys)
                self.unknown_keys.append(k)
        self.equations: list[Poly] = []
        self.contradiction: str | None = None
        self._build_pentagon()
        self._build_orthogonality()
        for factors_keys, rhs_terms in registered:
            self._add_registered(factors_keys, rhs_terms)

    # -- equation assembly -------------------------------------------------

    def _term(self, keys_and_consts) -> Poly:
        """Product of table keys and field constants as a one-term Poly."""
        coeff = self.ring.tower.one()
        mono: list[int] = []
        for item in keys_and_consts:
            if isinstance(item, FieldScalar):
                coeff = coeff * item
            else:
                v = self.known.get(item)
                if v is None:
                    mono.append(self.unknown_ids[item])
                else:
                    coeff = coeff * v
        if coeff.is_zero():
            return {}
        return {tuple(sorted(mono)): coeff}

    def _push(self, poly: Poly) -> None:
        if not poly:
            return
        unknowns = {i for m in poly for i in m}
        if not unknowns:
            if self.contradiction is None and any(m == () for m in poly):
                self.contradiction = "fully-known equation has nonzero residual"
            return
        if len(unknowns) > self.max_unknowns:
            return
        self.equations.append(poly)

    def _build_pentagon(self) -> None:
        known = self.known
        minus_one = -self.ring.tower.one()
        for tup in _raw_instances(self.ring):
            x, y, z, w, u, a, b, c, d, esum = tup
            slots = [FKey(x, y, c, u, d, a), FKey(a, z, w, u, c, b)]
            for t in esum:
                slots += [FKey(y, z, w, d, c, t), FKey(x, t, w, u, d, b),
                          FKey(x, y, z, b, t, a)]
            n_unknown = sum(1 for k in slots if k not in known)
            if n_unknown > self.max_unknowns:
                continue
            if n_unknown == 0:
                # consistency pruning: a fully-known instance must balance
                lhs = known[slots[0]] * known[slots[1]]
                for i in range(len(esum)):
                    k3, k4, k5 = slots[2 + 3 * i: 5 + 3 * i]
                    lhs = lhs - known[k3] * known[k4] * known[k5]
                if not lhs.is_zero() and self.contradiction is None:
                    self.contradiction = (
                        "nonzero residual on a fully-known pentagon instance")
                continue
            poly = self._term(slots[:2])
            for i in range(len(esum)):
                rhs = self._term(slots[2 + 3 * i: 5 + 3 * i])
                poly = _poly_add(poly, _poly_scale(rhs, minus_one))
            self._push(poly)

    def _build_orthogonality(self) -> None:
        one = self.ring.tower.one()
        for blk in f_blocks(self.ring):
            es, fs = blk.e_labels, blk.f_labels
            for i in range(blk.dim):
                for j in range(i, blk.dim):
                    rows = [(FKey(blk.a, blk.b, blk.c, blk.u, es[i], f),
                             FKey(blk.a, blk.b, blk.c, blk.u, es[j], f))
                            for f in fs]
                    cols = [(FKey(blk.a, blk.b, blk.c, blk.u, e, fs[i]),
                             FKey(blk.a, blk.b, blk.c, blk.u, e, fs[j]))
                            for e in es]
                    for pairs in (rows, cols):
                        poly: Poly = {}
                        for k1, k2 in pairs:
                            t = self._term([k1, k2])
                            poly = _poly_add(poly, t)
                        if i == j:
                            poly = _poly_add(poly, {(): -one})
                        self._push(poly)

    def _add_registered(self, factor_keys, rhs_terms) -> None:
        poly = self._term(factor_keys)
        for items in rhs_terms:
            poly = _poly_add(poly, _poly_scale(self._term(items),
                                               -self.ring.tower.one()))
        self._push(poly)

    # -- conclusions ---------------------------------------------------------

    def linear_assignments(self, equations=None) -> dict[int, FieldScalar]:
        out: dict[int, FieldScalar] = {}
        conflict = set()
        for poly in (self.equations if equations is None else equations):
            monos = [m for m in poly if m]
            if len(monos) != 1 or len(monos[0]) != 1:
                continue
            (uid,) = monos[0]
            value = -poly.get((), self.ring.tower.zero()) / poly[monos[0]]
            if uid in out and out[uid] != value:
                conflict.add(uid)
            out[uid] = value
        for uid in conflict:
            del out[uid]
        if conflict and self.contradiction is None:
            self.contradiction = "inconsistent linear conclusions"
        return out

    def rewritten(self) -> list[Poly]:
        """Equations with two-term aliases X_i = lam * X_j substituted away.

        Aliases are collected with a union-find whose edges carry the exact
        field factor, so chains and sign flips compose correctly.
        """
        parent: dict[int, tuple[int, FieldScalar]] = {}
        one = self.ring.tower.one()

        def find(i: int) -> tuple[int, FieldScalar]:
            factor = one
            while i in parent:
                i, f = parent[i]
                factor = factor * f
            return i, factor

        for poly in self.equations:
            if () in poly or len(poly) != 2:
                continue
            (m1, c1), (m2, c2) = sorted(poly.items())
            if len(m1) != 1 or len(m2) != 1:
                continue
            i, j = m1[0], m2[0]
            ri, fi = find(i)
            rj, fj = find(j)
            if ri == rj:
                continue
            # c1 * fi * X_ri + c2 * fj * X_rj = 0
            lam = -(c2 * fj) / (c1 * fi)
            if ri < rj:
                parent[rj] = (ri, (one / lam))
            else:
                parent[ri] = (rj, lam)
        if not parent:
            return self.equations
        out = []
        for poly in self.equations:
            new: Poly = {}
            for mono, coeff in poly.items():
                ids = []
                for i in mono:
                    r, f = find(i)
                    ids.append(r)
                    coeff = coeff * f
                m = tuple(sorted(ids))
                if m in new:
                    s = new[m] + coeff
                    if s.is_zero():
                        del new[m]
                    else:
                        new[m] = s
                elif not coeff.is_zero():
                    new[m] = coeff
            if new:
                if all(m == () for m in new):
                    if self.contradiction is None:
                        self.contradiction = (
                            "alias substitution exposed a nonzero residual")
                    continue
                out.append(new)
        return out

    def univariate_roots(self, equations=None) -> list[tuple[int, list[FieldScalar]]]:
        """Solutions of equations involving a single unknown, degree <= 2."""
        out = []
        seen = set()
        for poly in (self.equations if equations is None else equations):
            ids = {i for m in poly for i in m}
            if len(ids) != 1:
                continue
            (uid,) = ids
            degree = max(len(m) for m in poly)
            if degree > 2 or uid in seen:
                continue
            zero = self.ring.tower.zero()
            c0 = poly.get((), zero)
            c1 = poly.get((uid,), zero)
            c2 = poly.get((uid, uid), zero)
            if c2.is_zero():
                roots = [-c0 / c1]
            else:
                disc = c1 * c1 - 4 * c2 * c0
                s = field_sqrt(disc)
                if s is None:
                    roots = []
                else:
                    roots = [(-c1 + s) / (2 * c2)]
                    if not s.is_zero():
                        roots.append((-c1 - s) / (2 * c2))
            seen.add(uid)
            roots.sort(key=lambda v: v.coords, reverse=True)
            out.append((uid, roots))
        out.sort(key=lambda kv: kv[0])
        return out

    def eliminated(self, equations=None) -> list[Poly]:
        """Row-reduce over unknown monomials; returns the reduced rows."""
        rows = [dict(p) for p in (self.equations if equations is None else equations)]
        monos = sorted({m for p in rows for m in p if m},
                       key=lambda m: (-len(m), m))
        for pivot in monos:
            src = None
            for row in rows:
                if pivot in row and not row[pivot].is_zero():
                    src = row
                    break
            if src is None:
                continue
            inv = src[pivot].inverse()
            norm = {m: c * inv for m, c in src.items()}
            for row in rows:
                if row is src or pivot not in row:
                    continue
                f = row[pivot]
                for m, c in norm.items():
                    v = row.get(m, self.ring.tower.zero()) - f * c
                    if v.is_zero():
                        row.pop(m, None)
                    else:
                        row[m] = v
        return [r for r in rows if r]


def _is_one_dim(ring: FusionRing, key: FKey) -> bool:
    return len(ring.e_labels(key.a, key.b, key.c, key.u)) == 1


def _registered_constraints(ring: FusionRing):
    """Extra per-ring constraints: for h3 the two square-pop relations
    sqrt(d) * F[r;rrr]_{e=r,f=x} * F[x;rrr]_{e=r,f=r}
        = c1 * F[r;rrr]_{e=x,f=1} + c2 * F[r;rrr]_{e=x,f=r}
    for x in {ar, asr}; these are gauge-fixed to the data-set gauge."""
    if ring.name != "h3":
        return []
    r = ring.label("r")
    unit = ring.unit
    sqrt_d = named_constant("bBigon")
    c1 = named_constant("c1")
    c2 = named_constant("c2")
    out = []
    for x in (ring.label("ar"), ring.label("asr")):
        lhs = [sqrt_d, FKey(r, r, r, r, r, x), FKey(r, r, r, x, r, r)]
        rhs = [[c1, FKey(r, r, r, r, x, unit)], [c2, FKey(r, r, r, r, x, r)]]
        out.append((lhs, rhs))
    return out


def propagate(partial: PartialTable, max_rounds: int | None = None,
              max_unknowns: int = 4) -> tuple[PartialTable, SolveReport]:
    """Deterministic fixpoint of the three propagation steps (no branching).

    The returned report carries the per-round resolution counts; branch
    candidates discovered at the fixpoint are stored on the report as
    ``branch_options`` for :func:`solve` to explore.
    """
    partial = partial.copy()
    ring = partial.ring
    registered = _registered_constraints(ring)
    report = SolveReport(ring=ring.name, seeds=len(partial.known))
    start = time.monotonic()
    rounds = 0
    while max_rounds is None or rounds < max_rounds:
        rounds += 1
        system = _System(partial, registered, max_unknowns=max_unknowns)
        if system.contradiction:
            report.contradiction = system.contradiction
            break
        assignments = system.linear_assignments()
        rewritten = None
        if not assignments:
            rewritten = system.rewritten()
            if rewritten is not system.equations:
                assignments = system.linear_assignments(rewritten)
        if system.contradiction:
            report.contradiction = system.contradiction
            break
        branch_options: list[tuple[FKey, list[FieldScalar]]] = []
        if not assignments:
            candidates = system.univariate_roots()
            if not candidates:
                candidates = system.univariate_roots(rewritten)
            if not candidates:
                candidates = system.univariate_roots(system.eliminated(rewritten))
            for uid, roots in candidates:
                key = system.unknown_keys[uid]
                if _is_one_dim(ring, key):
                    roots = [v for v in roots if not v.is_zero()]
                if not roots:
                    report.contradiction = (
                        f"no admissible root for {ring.describe(key)}")
                    break
                if len(roots) == 1:
                    assignments[uid] = roots[0]
                else:
                    branch_options.append((key, roots))
            if report.contradiction:
                break
        if assignments:
            for uid, value in sorted(assignments.items()):
                partial.known[system.unknown_keys[uid]] = value
            report.rounds.append(len(assignments))
            continue
        report.branch_options = branch_options
        break
    report.remaining = sum(
        1 for k in enumerate_fkeys(ring) if k not in partial.known)
    report.duration = time.monotonic() - start
    return partial, report


def _verified(table: FSymbolTable) -> bool:
    return (verify_all(table, rule="vacuous").passed
            and table.check_orthogonality().passed)


def solve(ring, max_branch_nodes: int | None = None,
          with_report: bool = False):
    """Seed, propagate and branch until every surviving assignment is total.

    Returns the list of fully solved, independently re-verified tables
    (``with_report=True`` additionally returns the SolveReport of the first
    exploration path).  For h3 the default is propagation only, reflecting
    that the full solve is a stretch far beyond desk scale.
    """
    if isinstance(ring, str):
        ring = builtin_ring(ring)
    if max_branch_nodes is None:
        max_branch_nodes = 0 if ring.name == "h3" else 4096
    t0 = time.monotonic()
    tables: list[FSymbolTable] = []
    seen: set = set()
    first_report: SolveReport | None = None
    nodes = 0

    stack = [seed(ring)]
    while stack:
        state = stack.pop()
        state, report = propagate(state)
        if first_report is None:
            first_report = report
        if report.contradiction:
            continue
        if report.remaining == 0:
            table = state.as_table()
            fingerprint = tuple(
                state.known[k].coords for k in sorted(state.known, key=lambda k: k.sort_key))
            if fingerprint not in seen and _verified(table):
                seen.add(fingerprint)
                tables.append(table)
            continue
        options = report.branch_options
        if not options or nodes >= max_branch_nodes:
            continue
        nodes += 1
        key, roots = options[0]
        for value in reversed(roots):
            branch = state.copy()
            branch.known[key] = value
            branch.gauge_log.append(
                f"branch {ring.describe(key)} = {render_scalar(value)}")
            stack.append(branch)

    if first_report is not None:
        first_report.duration = time.monotonic() - t0
        first_report.branch_decisions = [f"explored {nodes} branch nodes"]
    if ring.name != "h3" and not tables and not with_report:
        raise RuntimeError("no branch survived verification")
    if with_report:
        return tables, first_report
    return tables


@dataclass
class ComparisonReport:
    compared: int = 0
    exact: int = 0
    up_to_sign: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def all_exact(self) -> bool:
        return self.compared == self.exact

    def render(self) -> str:
        out = (f"compared={self.compared} exact={self.exact} "
               f"up_to_sign={self.up_to_sign}")
        for m in self.mismatches[:20]:
            out += f"\nmismatch: {m}"
        return out


def compare_to_dataset(partial: PartialTable, table: FSymbolTable) -> ComparisonReport:
    """Exact-match report of a partial assignment against a reference table."""
    rep = ComparisonReport()
    for key in sorted(partial.known, key=lambda k: k.sort_key):
        value = ParamScalar.from_field(partial.known[key])
        want = table.entries[key]
        rep.compared += 1
        if value == want:
            rep.exact += 1
            rep.up_to_sign += 1
        elif value * value == want * want:
            rep.up_to_sign += 1
            rep.mismatches.append(
                f"{table.ring.describe(key)} (sign only)")
        else:
            rep.mismatches.append(table.ring.describe(key))
    return rep
