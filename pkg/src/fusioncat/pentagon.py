"""Enumeration and exact verification of the pentagon identities, the
triangle products, and the further consistency sweeps satisfied by the H3
data set.

For an instance with externals (x, y, z, w, u) and internals (a, b, c, d)
the residual is

    F[u; x y c; e=d f=a] * F[u; a z w; e=c f=b]
        - sum over t of  F[d; y z w; e=c f=t]
                         * F[u; x t w; e=d f=b]
                         * F[b; x y z; e=t f=a]

with t running over the labels admissible for all three right-hand keys.
Everything is evaluated exactly, symbolically in the sign parameters.

The bulk verifier normalizes every table value into q * P with q rational
and P an interned primitive field direction, so that products reduce to one
rational multiplication plus a lookup in a tiny product table, and the final
zero test is an integer-vector accumulation.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterator

from .exactnum import FieldScalar, ParamScalar, named_constant, render_scalar
from .fsymbols import FSymbolTable, BlockReport
from .fusionring import FKey, FusionRing, f_blocks

TRIVIALITY_RULES = ("unit", "identical", "both", "vacuous")


@dataclass(frozen=True)
class PentagonInstance:
    x: int
    y: int
    z: int
    w: int
    u: int
    a: int
    b: int
    c: int
    d: int
    e_sum: tuple[int, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return (self.x, self.y, self.z, self.w, self.u,
                self.a, self.b, self.c, self.d)

    def keys(self) -> list[FKey]:
        """The five key families; the summed keys once per summand."""
        x, y, z, w, u, a, b, c, d = self.labels
        out = [FKey(x, y, c, u, d, a), FKey(a, z, w, u, c, b)]
        for t in self.e_sum:
            out += [FKey(y, z, w, d, c, t), FKey(x, t, w, u, d, b),
                    FKey(x, y, z, b, t, a)]
        return out


def enumerate_instances(ring: FusionRing) -> Iterator[PentagonInstance]:
    """Deterministic lexicographic stream over (x, y, z, w, u, a, b, c, d)."""
    for tup in _raw_instances(ring):
        yield PentagonInstance(*tup[:9], e_sum=tup[9])


def _raw_instances(ring: FusionRing):
    for x in range(len(ring)):
        yield from _raw_instances_for_x(ring, x)


def _raw_instances_for_x(ring: FusionRing, x: int):
    n = len(ring)
    N = ring._n
    fus = ring._fusion
    rng = range(n)
    for y in rng:
        a_cands = fus[(x, y)]
        for z in rng:
            for w in rng:
                zw = fus[(z, w)]
                for u in rng:
                    for a in a_cands:
                        cs = [c for c in zw if N[a][c][u]]
                        if not cs:
                            continue
                        bs = [b for b in fus[(a, z)] if N[b][w][u]]
                        if not bs:
                            continue
                        for b in bs:
                            for c in cs:
                                for d in fus[(y, c)]:
                                    if not N[x][d][u]:
                                        continue
                                    esum = tuple(
                                        t for t in fus[(y, z)]
                                        if N[t][w][d] and N[x][t][b])
                                    yield (x, y, z, w, u, a, b, c, d, esum)


def _is_unit_key(ring: FusionRing, k: FKey) -> bool:
    return ring.unit in (k.a, k.b, k.c)


def classify(ring: FusionRing, inst: PentagonInstance, rule: str = "unit") -> bool:
    """True when the instance is trivial under the given rule.

    unit:       some external label x, y, z, w is the unit object; these
                instances reduce to triangle identities.
    identical:  after dropping the keys that carry a unit label themselves,
                both sides consist of the same formal keys (requires a
                single-term sum), so the equation holds for any table that
                satisfies the triangle identities.
    both:       trivial under either rule.
    vacuous:    nothing enumerable is trivial; the trivial equations are
                exactly the label assignments excluded by admissibility
                (for h3 this leaves the full count of 41391 equations).
    """
    if rule == "vacuous":
        return False
    if rule == "unit":
        return ring.unit in (inst.x, inst.y, inst.z, inst.w)
    if rule == "identical":
        x, y, z, w, u, a, b, c, d = inst.labels
        lhs = [k for k in (FKey(x, y, c, u, d, a), FKey(a, z, w, u, c, b))
               if not _is_unit_key(ring, k)]
        if len(inst.e_sum) != 1:
            return False
        t = inst.e_sum[0]
        rhs = [k for k in (FKey(y, z, w, d, c, t), FKey(x, t, w, u, d, b),
                           FKey(x, y, z, b, t, a)) if not _is_unit_key(ring, k)]
        return sorted(lhs) == sorted(rhs)
    if rule == "both":
        return classify(ring, inst, "unit") or classify(ring, inst, "identical")
    raise ValueError(f"unknown triviality rule {rule!r}")


def residual(inst: PentagonInstance, table: FSymbolTable) -> ParamScalar:
    """Left side minus right side, exact and symbolic in p1, p2."""
    x, y, z, w, u, a, b, c, d = inst.labels
    g = table.entries
    lhs = g[FKey(x, y, c, u, d, a)] * g[FKey(a, z, w, u, c, b)]
    rhs = ParamScalar.from_field(table.ring.tower.zero())
    for t in inst.e_sum:
        rhs = rhs + (g[FKey(y, z, w, d, c, t)] * g[FKey(x, t, w, u, d, b)]
                     * g[FKey(x, y, z, b, t, a)])
    return lhs - rhs


# ---------------------------------------------------------------------------
# fast exact kernel

class _Kernel:
    """Exact residual evaluation over interned primitive field directions."""

    def __init__(self, table: FSymbolTable):
        self.tower = table.ring.tower
        self.degree = self.tower.degree
        self.prims: list[tuple[int, ...]] = []
        self.prim_ids: dict[tuple[int, ...], int] = {}
        self.prodtab: dict[tuple[int, int], tuple[Fraction, int]] = {}
        self.values = self.compile(table.entries)

    def compile(self, entries: dict[FKey, ParamScalar]):
        return {k: tuple(((i | (j << 1)),) + self._decompose(coeff)
                         for (i, j), coeff in sorted(v.terms.items()))
                for k, v in entries.items()}

    def _decompose(self, x: FieldScalar) -> tuple[Fraction, int]:
        den = reduce(lambda acc, q: acc * q.denominator // gcd(acc, q.denominator),
                     x.coords, 1)
        vec = [int(q * den) for q in x.coords]
        g = reduce(gcd, vec)
        lead = next(v for v in vec if v)
        if lead < 0:
            g = -g
        prim = tuple(v // g for v in vec)
        pid = self.prim_ids.get(prim)
        if pid is None:
            pid = len(self.prims)
            self.prim_ids[prim] = pid
            self.prims.append(prim)
        return Fraction(g, den), pid

    def _prim_mul(self, p1: int, p2: int) -> tuple[Fraction, int]:
        hit = self.prodtab.get((p1, p2))
        if hit is None:
            s1 = self.tower.from_coords(self.prims[p1])
            s2 = self.tower.from_coords(self.prims[p2])
            hit = self._decompose(s1 * s2)
            self.prodtab[(p1, p2)] = hit
            self.prodtab[(p2, p1)] = hit
        return hit

    def term_mul(self, t1, t2):
        out = []
        for m1, q1, p1 in t1:
            for m2, q2, p2 in t2:
                qq, pp = self._prim_mul(p1, p2)
                out.append((m1 ^ m2, q1 * q2 * qq, pp))
        return out

    def residual_terms(self, inst_tuple) -> list[tuple[int, Fraction, int]]:
        x, y, z, w, u, a, b, c, d, esum = inst_tuple
        V = self.values
        terms: list[tuple[int, Fraction, int]] = []
        for m1, q1, p1 in V[FKey(x, y, c, u, d, a)]:
            for m2, q2, p2 in V[FKey(a, z, w, u, c, b)]:
                qq, pp = self._prim_mul(p1, p2)
                terms.append((m1 ^ m2, q1 * q2 * qq, pp))
        for t in esum:
            for m1, q1, p1 in V[FKey(y, z, w, d, c, t)]:
                for m2, q2, p2 in V[FKey(x, t, w, u, d, b)]:
                    q12, p12 = self._prim_mul(p1, p2)
                    for m3, q3, p3 in V[FKey(x, y, z, b, t, a)]:
                        qq, pp = self._prim_mul(p12, p3)
                        terms.append((m1 ^ m2 ^ m3, -q1 * q2 * q12 * q3 * qq, pp))
        return terms

    def is_zero(self, terms) -> bool:
        by_mono: dict[int, dict[int, Fraction]] = {}
        for mono, q, pid in terms:
            slot = by_mono.setdefault(mono, {})
            slot[pid] = slot.get(pid, 0) + q
        for slot in by_mono.values():
            live = [(q, pid) for pid, q in slot.items() if q]
            if not live:
                continue
            coords = [Fraction(0)] * self.degree
            for q, pid in live:
                prim = self.prims[pid]
                for i, v in enumerate(prim):
                    if v:
                        coords[i] += q * v
            if any(coords):
                return False
        return True

    def residual_scalar(self, inst_tuple) -> ParamScalar:
        terms = self.residual_terms(inst_tuple)
        out: dict[tuple[int, int], FieldScalar] = {}
        for mono, q, pid in terms:
            m = (mono & 1, mono >> 1)
            val = self.tower.from_coords(self.prims[pid]) * q
            out[m] = out[m] + val if m in out else val
        return ParamScalar(self.tower, out)


@dataclass
class VerifyReport:
    rule: str
    total: int = 0
    trivial: int = 0
    failures: list[tuple[tuple, str]] = field(default_factory=list)
    duration: float = 0.0

    @property
    def nontrivial(self) -> int:
        return self.total - self.trivial

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        self.total += other.total
        self.trivial += other.trivial
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        return (f"instances={self.total} trivial={self.trivial} "
                f"nontrivial={self.nontrivial} failures={len(self.failures)}")

    def render(self) -> str:
        lines = []
        for labels, expr in sorted(self.failures):
            lines.append("FAIL " + " ".join(str(v) for v in labels)
                         + f" residual={expr}")
        lines.append(self.summary())
        return "\n".join(lines)


def _verify_chunk(table: FSymbolTable, xs, rule: str) -> VerifyReport:
    ring = table.ring
    kernel = _Kernel(table)
    unit = ring.unit
    rep = VerifyReport(rule=rule)
    use_unit = rule in ("unit", "both")
    use_ident = rule in ("identical", "both")
    for x in xs:
        for tup in _raw_instances_for_x(ring, x):
            rep.total += 1
            if use_unit and unit in tup[:4]:
                rep.trivial += 1
                continue
            if use_ident and classify(
                    ring, PentagonInstance(*tup[:9], e_sum=tup[9]), "identical"):
                rep.trivial += 1
                continue
            # the vacuous rule keeps everything
            terms = kernel.residual_terms(tup)
            if not kernel.is_zero(terms):
                expr = render_scalar(kernel.residual_scalar(tup))
                rep.failures.append((tup[:9], expr))
    return rep


_FORK_STATE: dict = {}


def _pool_worker(args):
    table, rule = _FORK_STATE["table"], _FORK_STATE["rule"]
    return _verify_chunk(table, [args], rule)


def verify_all(table: FSymbolTable, jobs: int = 1, rule: str = "unit") -> VerifyReport:
    """Evaluate the residual of every nontrivial instance; exact throughout."""
    if rule not in TRIVIALITY_RULES:
        raise ValueError(f"unknown triviality rule {rule!r}")
    start = time.monotonic()
    n = len(table.ring)
    if jobs > 1 and hasattr(os, "fork"):
        import multiprocessing as mp

        _FORK_STATE["table"] = table
        _FORK_STATE["rule"] = rule
        try:
            with mp.get_context("fork").Pool(min(jobs, n)) as pool:
                parts = pool.map(_pool_worker, range(n))
        finally:
            _FORK_STATE.clear()
        rep = VerifyReport(rule=rule)
        for part in parts:
            rep.merge(part)
    else:
        rep = _verify_chunk(table, range(n), rule)
    rep.failures.sort()
    rep.duration = time.monotonic() - start
    return rep


def count_instances(ring: FusionRing) -> dict[str, int]:
    """Instance totals and the trivial counts under every shipped rule."""
    counts = {"total": 0, "unit": 0, "identical": 0, "both": 0, "vacuous": 0}
    unit = ring.unit
    for tup in _raw_instances(ring):
        counts["total"] += 1
        is_unit = unit in tup[:4]
        inst = PentagonInstance(*tup[:9], e_sum=tup[9])
        is_ident = classify(ring, inst, "identical")
        counts["unit"] += is_unit
        counts["identical"] += is_ident
        counts["both"] += is_unit or is_ident
    return counts


# ---------------------------------------------------------------------------
# mutation helpers

def negate_entry(table: FSymbolTable, key: FKey) -> FSymbolTable:
    return table.map_entries(lambda k, v: -v if k == key else v)


_INDEX_CACHE: dict[str, tuple[list, dict]] = {}


def key_instance_index(ring: FusionRing) -> tuple[list, dict[FKey, list[int]]]:
    """Materialized instance list plus a map key -> instance positions."""
    if ring.name not in _INDEX_CACHE:
        instances = list(_raw_instances(ring))
        index: dict[FKey, list[int]] = {}
        for pos, tup in enumerate(instances):
            inst = PentagonInstance(*tup[:9], e_sum=tup[9])
            for k in set(inst.keys()):
                index.setdefault(k, []).append(pos)
        _INDEX_CACHE[ring.name] = (instances, index)
    return _INDEX_CACHE[ring.name]


def find_failing_instance(table: FSymbolTable, key: FKey,
                          kernel: "_Kernel | None" = None) -> PentagonInstance | None:
    """First pentagon instance touching ``key`` with a nonzero residual."""
    instances, index = key_instance_index(table.ring)
    if kernel is None:
        kernel = _Kernel(table)
    for pos in index.get(key, ()):
        tup = instances[pos]
        if not kernel.is_zero(kernel.residual_terms(tup)):
            return PentagonInstance(*tup[:9], e_sum=tup[9])
    return None


# ---------------------------------------------------------------------------
# starred (adjoint) entries
#
# The starred matrix is the inverse.  In the data set's gauge every block is
# real orthogonal, so the inverse is just the transpose there, but a gauged
# table is no longer orthogonal and only the inverse keeps the identities
# below gauge invariant.

def _field_matrix_inverse(tower, m):
    n = len(m)
    aug = [list(row) + [tower.one() if i == j else tower.zero()
                        for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("block matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _invert_param_matrix(tower, m):
    """Exact inverse of a matrix over the ring of p1/p2 sign polynomials.

    The ring splits into four copies of the field, one per substitution, so
    the inverse is computed pointwise and reassembled: the coefficient of
    p1^i p2^j is (1/4) * sum over signs of s1^i s2^j times the pointwise
    inverse.
    """
    n = len(m)
    points = {}
    for s1 in (1, -1):
        for s2 in (1, -1):
            mm = [[v.substitute(s1, s2) for v in row] for row in m]
            points[(s1, s2)] = _field_matrix_inverse(tower, mm)
    quarter = Fraction(1, 4)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            terms = {}
            for i in (0, 1):
                for j in (0, 1):
                    acc = tower.zero()
                    for (s1, s2), inv in points.items():
                        acc = acc + inv[r][c] * (s1 ** i * s2 ** j)
                    terms[(i, j)] = acc * quarter
            row.append(ParamScalar(tower, terms))
        out.append(row)
    return out


def starred_entries(table: FSymbolTable) -> dict[FKey, ParamScalar]:
    """Map key -> entry of the inverse block at (row f, column e).

    Addressed by the same keys as the table itself, so the starred factor
    (F_u^{abc})*_{f e} is ``starred[key(a, b, c, u, e, f)]``.
    """
    ring = table.ring
    tower = ring.tower
    out: dict[FKey, ParamScalar] = {}
    for blk in f_blocks(ring):
        m = table.f_matrix(blk.a, blk.b, blk.c, blk.u)
        inv = _invert_param_matrix(tower, m)
        for ei, e in enumerate(blk.e_labels):
            for fi, f in enumerate(blk.f_labels):
                out[FKey(blk.a, blk.b, blk.c, blk.u, e, f)] = inv[fi][ei]
    return out


# ---------------------------------------------------------------------------
# triangle, additional and seed checks

def check_triangle(table: FSymbolTable) -> BlockReport:
    """Thm-style product identities for the unit-label one-dim entries:
    F[z; 1 x y] * F[x; 1 z y] = 1 and F[z; x y 1] * F[y; x z 1] = 1."""
    ring = table.ring
    unit = ring.unit
    one = ParamScalar.from_field(ring.tower.one())
    report = BlockReport("triangle")
    n = len(ring)
    t = ring.token
    for x, y, z in product(range(n), repeat=3):
        if not ring.n(x, y, z):
            continue
        # both factors must exist (the spaces must be one-dimensional)
        if ring.n(z, y, x):
            first = (table.entries[FKey(unit, x, y, z, z, x)]
                     * table.entries[FKey(unit, z, y, x, x, z)])
            report.checked += 1
            if first != one:
                report.failures.append(f"F[{t(z)};1 {t(x)} {t(y)}] product != 1")
        if ring.n(x, z, y):
            second = (table.entries[FKey(x, y, unit, z, y, z)]
                      * table.entries[FKey(x, z, unit, y, z, y)])
            report.checked += 1
            if second != one:
                report.failures.append(f"F[{t(z)};{t(x)} {t(y)} 1] product != 1")
    return report


def check_additional(table: FSymbolTable) -> BlockReport:
    """Full sweep of the mixed associativity identity

        sum over s of  F[u; a x1 x4; e=s f=x3] * F[x3'; x1 x2 c]*_{b x4}
                       * F[u; a b c]*_{y s}
            = F[u; x3 x2 c]*_{y x4} * F[y; a x1 x2; e=b f=x3]

    with * read as transpose (the solution is real orthogonal).  Labels run
    over every assignment satisfying N_u^{x3 x4} = N_x3^{a x1} = N_x4^{x2 c}
    = N_b^{x1 x2} = 1 plus admissibility of the two right-hand keys.
    """
    ring = table.ring
    N = ring._n
    fus = ring._fusion
    n = len(ring)
    report = BlockReport("additional")
    kernel = _Kernel(table)
    V = kernel.values
    S = kernel.compile(starred_entries(table))
    for a in range(n):
        for x1 in range(n):
            for x3 in fus[(a, x1)]:
                for x2 in range(n):
                    for b in fus[(x1, x2)]:
                        for c in range(n):
                            for x4 in fus[(x2, c)]:
                                for u in fus[(x3, x4)]:
                                    for y in fus[(a, b)]:
                                        if not (N[x3][x2][y] and N[y][c][u]):
                                            continue
                                        terms = [
                                            (m, -q, p) for m, q, p in kernel.term_mul(
                                                S[FKey(x3, x2, c, u, x4, y)],
                                                V[FKey(a, x1, x2, y, b, x3)])]
                                        for s in fus[(x1, x4)]:
                                            if not (N[a][s][u] and N[b][c][s]):
                                                continue
                                            terms += kernel.term_mul(
                                                kernel.term_mul(
                                                    V[FKey(a, x1, x4, u, s, x3)],
                                                    S[FKey(x1, x2, c, s, x4, b)]),
                                                S[FKey(a, b, c, u, s, y)])
                                        report.checked += 1
                                        if not kernel.is_zero(terms):
                                            report.failures.append(
                                                f"a={a} x1={x1} x2={x2} x3={x3} "
                                                f"x4={x4} c={c} u={u} b={b} y={y}")
    return report


def check_addtriv(table: FSymbolTable) -> BlockReport:
    """The two square-pop identities tying the all-rho block to c1 and c2.

    These hold in the data set's gauge only; re-gauging any of the touched
    vertices breaks them (which `test` callers exercise deliberately).
    """
    ring = table.ring
    if ring.name != "h3":
        raise ValueError("the square-pop identities are specific to the h3 ring")
    report = BlockReport("addtriv (gauge-dependent: data-set gauge only)")
    g = table.entries
    starred = starred_entries(table)
    r = ring.label("r")
    unit = ring.unit
    c1 = ParamScalar.from_field(named_constant("c1"))
    c2 = ParamScalar.from_field(named_constant("c2"))
    sqrt_d = ParamScalar.from_field(named_constant("bBigon"))
    for xr in (ring.label("ar"), ring.label("asr")):
        # the first factor is the starred all-rho entry at (f=x, e=r)
        lhs = starred[FKey(r, r, r, r, r, xr)] * g[FKey(r, r, r, xr, r, r)] * sqrt_d
        rhs = c1 * g[FKey(r, r, r, r, xr, unit)] + c2 * g[FKey(r, r, r, r, xr, r)]
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"x={ring.token(xr)}")
    return report


def check_seeds(table: FSymbolTable) -> BlockReport:
    """The theorem-forced values: unit-label {1, rho} entries are 1, the
    rho-unit-rho families are 1, and (F[r; r r r])_{e=r, f=r} = -B."""
    ring = table.ring
    if ring.name != "h3":
        raise ValueError("seed values are specific to the h3 ring")
    report = BlockReport("seeds")
    one = ParamScalar.from_field(ring.tower.one())
    unit, r = ring.unit, ring.label("r")
    rho_family = (ring.label("r"), ring.label("ar"), ring.label("asr"))

    for k, v in table.entries.items():
        labels = (k.a, k.b, k.c, k.u)
        if set(labels) <= {unit, r} and unit in labels:
            report.checked += 1
            if v != one:
                report.failures.append(f"{ring.describe(k)} != 1")
    for x in rho_family:
        cases = [FKey(r, unit, r, x, r, r),   # F[x; r 1 r]
                 FKey(unit, r, x, r, r, r),   # F[r; 1 r x]
                 FKey(x, r, unit, r, r, r)]   # F[r; x r 1]
        for k in cases:
            k = FKey(k.a, k.b, k.c, k.u,
                     ring.e_labels(k.a, k.b, k.c, k.u)[0],
                     ring.f_labels(k.a, k.b, k.c, k.u)[0])
            report.checked += 1
            if table.entries[k] != one:
                report.failures.append(f"{ring.describe(k)} != 1")
    minus_b = ParamScalar.from_field(-named_constant("B"))
    report.checked += 1
    if table.entries[FKey(r, r, r, r, r, r)] != minus_b:
        report.failures.append("(F[r; r r r])_{rr} != -B")
    return report
