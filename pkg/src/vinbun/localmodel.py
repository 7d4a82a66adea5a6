"""Explicit local-model fibers: equations, exhaustive point counts, defect.

The fiber of the n-th local model over the point n*x carries coordinates
(a_{-n}, ..., a_{-1}, b_0, ..., b_{n-1}) subject to the n-1 bilinear
equations

    a_{-n} b_1 + a_{-n+1} b_0                    = 0
    a_{-n} b_2 + a_{-n+1} b_1 + a_{-n+2} b_0     = 0
    ...
    a_{-n} b_{n-1} + ... + a_{-1} b_0            = 0

(equation r collects the pairs with i + j = r - n), and maps to the affine
line by d = a_{-n} b_0.  The fiber over a divisor with several rational
points of multiplicities (n_1, ..., n_m) is the iterated fiber product of
the single-point fibers over the d-line, i.e. one block of coordinates per
point with all the d-expressions forced equal.

Point counts are exact exhaustive enumeration over integer-encoded field
elements.  The optimized path solves the equations for b_1, ..., b_{m-1}
when the pivot a_{-m} is nonzero (they are linear in b with that pivot) and
falls back to plain iteration otherwise; it is checked bit-identical against
the fully naive nested loop.  Workers partition the a-coordinate space into
disjoint integer ranges and contribute order-independent sums, so counts do
not depend on the worker count.

The defect of a B-locus point (d = 0) of a multiplicity-m factor is the
t-adic valuation of the first determinantal ideal of the 2x2 matrix
[[t^m, f], [-g t^m, -g f]] with f = sum b_j t^j and g t^m = sum a_i t^(m+i):
the minimum of m, ord(f), ord(g t^m) and ord of the polynomial part of -g f.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from vinbun.arith import EffectiveDivisor
from vinbun.budget import POINT_COUNT_BUDGET, check_budget
from vinbun.kcalc import trace_omega_tilde

_INF = float("inf")


# ---------------------------------------------------------------------------
# equation systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EquationSystem:
    """Bilinear equations of a local-model fiber over a divisor with rational
    support and the given multiplicities.  A factor of multiplicity m carries
    variables a_{-m..-1}, b_{0..m-1}, exactly m-1 equations, and the
    d-expression a_{-m} b_0; the d-expressions of all factors are equated."""

    multiplicities: tuple

    @property
    def n(self):
        return sum(self.multiplicities)

    def factor_equations(self, m):
        """Equation r (1 <= r <= m-1) as a list of (i, j) index pairs with
        i + j = r - m, i in -m..-1, j in 0..m-1."""
        out = []
        for r in range(1, m):
            out.append([(i, r - m - i) for i in range(-m, -m + r + 1)])
        return out

    def equations_text(self):
        """Canonical text form, one line per equation plus the d-couplings."""
        lines = []
        multi = len(self.multiplicities) > 1
        for idx, m in enumerate(self.multiplicities):
            a = f"a{idx + 1}" if multi else "a"
            b = f"b{idx + 1}" if multi else "b"
            for eq in self.factor_equations(m):
                terms = " + ".join(f"{a}[{i}]*{b}[{j}]" for i, j in eq)
                lines.append(f"{terms} = 0")
        for idx in range(len(self.multiplicities) - 1):
            m1, m2 = self.multiplicities[idx], self.multiplicities[idx + 1]
            lines.append(
                f"a{idx + 1}[{-m1}]*b{idx + 1}[0] = a{idx + 2}[{-m2}]*b{idx + 2}[0]"
            )
        return lines

    def variable_count(self):
        return 2 * self.n


def build_system(multiplicities):
    multiplicities = tuple(int(m) for m in multiplicities)
    if not multiplicities or any(m < 1 for m in multiplicities):
        raise ValueError("multiplicities must be a nonempty list of positive ints")
    return EquationSystem(multiplicities=multiplicities)


@dataclass(frozen=True)
class SolutionPoint:
    """Coordinate assignment for every factor, with the common d-value.

    Factor coordinates are ((a_{-m}, ..., a_{-1}), (b_0, ..., b_{m-1}))."""

    factors: tuple
    d_value: int


def make_solution_point(field, factors):
    factors = tuple((tuple(a), tuple(b)) for a, b in factors)
    ds = {field.mul(a[0], b[0]) for a, b in factors}
    if len(ds) != 1:
        raise ValueError(f"d-expressions disagree across factors: {sorted(ds)}")
    return SolutionPoint(factors=factors, d_value=ds.pop())


def point_satisfies(system, field, point):
    """Evaluate every bilinear equation and the d-couplings at the point."""
    if len(point.factors) != len(system.multiplicities):
        return False
    ds = set()
    for (a, b), m in zip(point.factors, system.multiplicities):
        if len(a) != m or len(b) != m:
            return False
        for eq in system.factor_equations(m):
            acc = 0
            for i, j in eq:
                acc = field.add(acc, field.mul(a[i + m], b[j]))
            if acc != 0:
                return False
        ds.add(field.mul(a[0], b[0]))
    return len(ds) == 1 and ds.pop() == point.d_value


# ---------------------------------------------------------------------------
# enumeration cores
# ---------------------------------------------------------------------------


def _decode(code, q, m):
    out = []
    for _ in range(m):
        out.append(code % q)
        code //= q
    return tuple(out)


def _iter_factor_solutions(field, m, a_range=None):
    """All ((a), (b)) solving the m-1 factor equations, a-space restricted to
    the given code range.  a[0] encodes a_{-m} (the pivot), b[j] encodes b_j."""
    q = field.q
    mul, add, neg, inv = field.mul, field.add, field.neg, field.inv
    lo, hi = a_range if a_range is not None else (0, q**m)
    for a_code in range(lo, hi):
        a = _decode(a_code, q, m)
        if a[0]:
            inv0 = neg(inv(a[0]))
            for b0 in range(q):
                b = [b0]
                for r in range(1, m):
                    acc = 0
                    for j in range(r):
                        acc = add(acc, mul(a[r - j], b[j]))
                    b.append(mul(inv0, acc))
                yield a, tuple(b)
        else:
            for b_code in range(q**m):
                b = _decode(b_code, q, m)
                ok = True
                for r in range(1, m):
                    acc = 0
                    for j in range(r + 1):
                        acc = add(acc, mul(a[r - j], b[j]))
                    if acc != 0:
                        ok = False
                        break
                if ok:
                    yield a, b


def _iter_factor_solutions_naive(field, m):
    """Fully naive double loop over all of F_q^(2m); the optimized iterator
    must be bit-identical in counts to this one."""
    q = field.q
    mul, add = field.mul, field.add
    for a_code in range(q**m):
        a = _decode(a_code, q, m)
        for b_code in range(q**m):
            b = _decode(b_code, q, m)
            ok = True
            for r in range(1, m):
                acc = 0
                for j in range(r + 1):
                    acc = add(acc, mul(a[r - j], b[j]))
                if acc != 0:
                    ok = False
                    break
            if ok:
                yield a, b


def _table_chunk(field, m, a_range):
    table = {}
    for a, b in _iter_factor_solutions(field, m, a_range):
        d = field.mul(a[0], b[0])
        table[d] = table.get(d, 0) + 1
    return table


@lru_cache(maxsize=None)
def factor_d_table(field, m, jobs=1):
    """Count of factor solutions per d-value, as a dict d -> count.

    jobs > 1 partitions the a-coordinate codes into disjoint ranges handled
    by independent workers; the merge is an order-independent sum.
    """
    q = field.q
    space = q**m
    if jobs <= 1:
        return dict(_table_chunk(field, m, (0, space)))
    bounds = [space * i // jobs for i in range(jobs + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(jobs)]
    merged = {}
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(lambda r: _table_chunk(field, m, r), ranges):
            for d, c in chunk.items():
                merged[d] = merged.get(d, 0) + c
    return merged


def count_points(system, field, d_constraint="any", jobs=1, naive=False, budget=None):
    """Exact number of F_q-points of the coupled system with the d-value
    filtered by the constraint ("any" | "zero" | "nonzero" | an element code).

    The default path composes per-factor d-tables (the factorization of the
    fiber product over the d-line); naive=True runs the literal nested loop
    over all coordinates instead.
    """
    q = field.q
    space = q ** (2 * system.n)
    check_budget(space, budget if budget is not None else POINT_COUNT_BUDGET,
                 f"count_points{system.multiplicities}")
    if naive:
        return _count_points_naive(system, field, d_constraint)
    tables = [factor_d_table(field, m, jobs) for m in system.multiplicities]

    def combined(c):
        total = 1
        for t in tables:
            total *= t.get(c, 0)
            if not total:
                break
        return total

    if d_constraint == "any":
        return sum(combined(c) for c in range(q))
    if d_constraint == "zero":
        return combined(0)
    if d_constraint == "nonzero":
        return sum(combined(c) for c in range(1, q))
    if isinstance(d_constraint, int):
        if not 0 <= d_constraint < q:
            raise ValueError(f"d-value {d_constraint} outside F_{q}")
        return combined(d_constraint)
    raise ValueError(f"unknown d-constraint {d_constraint!r}")


def _count_points_naive(system, field, d_constraint):
    mults = system.multiplicities
    total = 0
    iters = [list(_iter_factor_solutions_naive(field, m)) for m in mults]

    def rec(idx, d):
        nonlocal total
        if idx == len(mults):
            if d_constraint == "any":
                total += 1
            elif d_constraint == "zero":
                total += d == 0
            elif d_constraint == "nonzero":
                total += d != 0
            else:
                total += d == d_constraint
            return
        for a, b in iters[idx]:
            d_here = field.mul(a[0], b[0])
            if idx > 0 and d_here != d:
                continue
            rec(idx + 1, d_here)

    rec(0, None)
    return total


# ---------------------------------------------------------------------------
# defect
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DefectProfile:
    per_factor: tuple

    @property
    def total(self):
        return sum(self.per_factor)


def factor_defect(field, m, a, b):
    """Defect of a single-factor B-locus point: the minimum of m and the
    t-adic valuations of the matrix entries f, g t^m and the polynomial part
    of -g f (whose first surviving coefficient is scanned directly)."""
    ord_f = next((j for j in range(m) if b[j]), _INF)
    ord_g = next((i for i in range(m) if a[i]), _INF)
    if ord_f is _INF and ord_g is _INF:
        return m
    # first r >= 0 with a nonzero coefficient sum_{(i+m)+j = r+m} a_i b_j
    ord_gf = _INF
    for r in range(2 * m - 1):
        acc = 0
        for ai in range(m):
            j = r + m - ai
            if 0 <= j < m:
                acc = field.add(acc, field.mul(a[ai], b[j]))
        if acc != 0:
            ord_gf = r
            break
    return int(min(m, ord_f, ord_g, ord_gf))


def defect_profile(system, field, point):
    """Per-factor defects of a B-locus point.  Raises on the G-locus."""
    if point.d_value != 0:
        raise ValueError("defect is defined on the B-locus only (d = 0)")
    if not point_satisfies(system, field, point):
        raise ValueError("point does not lie on the system")
    per = []
    for (a, b), m in zip(point.factors, system.multiplicities):
        per.append(factor_defect(field, m, a, b))
    return DefectProfile(per_factor=tuple(per))


def strata_counts(n, field, budget=None):
    """Classify all d = 0 points of the single factor [n] by defect."""
    q = field.q
    check_budget(q ** (2 * n), budget if budget is not None else POINT_COUNT_BUDGET,
                 f"strata_counts[{n}]")
    counts = {}
    for a, b in _iter_factor_solutions(field, n):
        if field.mul(a[0], b[0]) != 0:
            continue
        k = factor_defect(field, n, a, b)
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def expected_strata_counts(n, q):
    """Closed form: count(k) = sum over n1+n2 = n-k of c(n1) c(n2) with
    c(0) = 1 and c(m) = q^m - q^(m-1)."""

    def c(m):
        return 1 if m == 0 else q**m - q ** (m - 1)

    return {
        k: sum(c(n1) * c(n - k - n1) for n1 in range(n - k + 1))
        for k in range(n + 1)
    }


# ---------------------------------------------------------------------------
# identities tying enumeration to the trace calculus
# ---------------------------------------------------------------------------


def per_fiber_uniformity(n, field, jobs=1):
    """True iff the count over d = c is the same for every c != 0 (the
    product-decomposition shadow of the G-locus)."""
    table = factor_d_table(field, n, jobs)
    nonzero = {table.get(c, 0) for c in range(1, field.q)}
    return len(nonzero) == 1


def gm_orbit_check(system, field, point, c):
    """The quadratic scaling (a, b) -> (c^2 a, c^2 b) preserves the system
    and scales d by c^4."""
    c2 = field.mul(c, c)
    scaled = tuple(
        (
            tuple(field.mul(c2, x) for x in a),
            tuple(field.mul(c2, x) for x in b),
        )
        for a, b in point.factors
    )
    new_point = make_solution_point(field, scaled)
    c4 = field.mul(c2, c2)
    return point_satisfies(system, field, new_point) and new_point.d_value == field.mul(
        c4, point.d_value
    )


def g_locus_count(field, multiplicities, jobs=1, budget=None):
    """Points of the coupled fiber with d != 0."""
    system = build_system(multiplicities)
    return count_points(system, field, "nonzero", jobs=jobs, budget=budget)


def omega_point_count_identity(n, divisor, field, jobs=1, budget=None):
    """Check #(G-locus of the fiber over D) = q^n (q-1) * omega-trace at
    v^2 = q, and the closed form (q-1)^(m+1) q^(n-m) for m distinct points.

    D must be supported on rational points (fibers over higher-degree points
    would need coordinates the equations do not provide)."""
    if divisor.degree != n:
        raise ValueError("degree mismatch")
    if any(pt.degree != 1 or pt.is_infinity for pt, _ in divisor):
        raise ValueError("divisor must be supported on rational points of A^1")
    q = field.q
    mults = tuple(m for _, m in divisor.parts)
    count = g_locus_count(field, mults, jobs=jobs, budget=budget)
    trace = trace_omega_tilde(n, divisor).at_q(q)
    predicted = Fraction(q**n * (q - 1)) * trace
    m = len(divisor.parts)
    closed_form = (q - 1) ** (m + 1) * q ** (n - m)
    return Fraction(count) == predicted and count == closed_form
