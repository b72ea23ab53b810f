"""Inhomogeneous symmetric interpolation at partition nodes.

The basic object is the family P_lam attached to a shift vector rho: the
unique symmetric polynomial of degree <= |lam| that vanishes at mu + rho
for every partition mu != lam with |mu| <= |lam| and takes the shifted
hook product as its value at lam + rho.  Equivalently (and the solver
checks this on every run) its m_lam coefficient is 1.

Everything is exact.  Symbolic shifts produce coefficients in Q(r); the
linear systems are solved fraction-free and only leave the polynomial
ring during back-substitution.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from .partitions import (as_partition, enumerate_exact, enumerate_upto,
                         rho_hook_product, staircase, trim)
from .scalars import (ExactDivisionError, RationalFunction, UniPoly,
                      _lift, binom_scalar, common_denominator, scalar_key)
from .sympoly import (SparsePoly, SymPoly, collect_symmetric, complete_eval,
                      divide_by_vandermonde, elementary, falling_power,
                      factorial_monomial, vandermonde)


class NonDominantError(ValueError):
    """The shift vector fails the dominance condition the caller needs."""


def _is_negative_integer(x, low=None):
    """Is the scalar a negative integer (optionally >= low)?"""
    if isinstance(x, RationalFunction):
        if not x.is_constant():
            return False
        x = x.constant_value()
    if x.denominator != 1 or x >= 0:
        return False
    return low is None or x >= low


class ShiftVector:
    """Shift rho added to partition nodes; immutable and hashable.

    Either a staircase multiple (entries r*(n-1), ..., r, 0) or a generic
    tuple of scalars.  All entries must live in one scalar world.
    """

    __slots__ = ("entries", "r")

    def __init__(self, entries, r=None):
        self.entries = tuple(_lift(e) for e in entries)
        self.r = r

    @classmethod
    def staircase_multiple(cls, n, r):
        r = _lift(r)
        return cls([r * d for d in staircase(n)], r=r)

    @classmethod
    def generic(cls, entries):
        return cls(entries)

    @property
    def n(self):
        return len(self.entries)

    def point(self, mu):
        """The interpolation node mu + rho."""
        mu = as_partition(mu, self.n)
        return tuple(m + e for m, e in zip(mu, self.entries))

    def is_dominant(self):
        """No difference rho_i - rho_j (i < j) is a negative integer."""
        es = self.entries
        return not any(_is_negative_integer(es[i] - es[j])
                       for i in range(len(es)) for j in range(i + 1, len(es)))

    def is_d_dominant(self, d):
        """The weaker gate used at degree d.

        Only differences in {-1, ..., -floor(d/i)} hurt, where i is the
        1-based position of the earlier entry.
        """
        es = self.entries
        return not any(
            _is_negative_integer(es[i] - es[j], low=-(d // (i + 1)))
            for i in range(len(es)) if d // (i + 1) > 0
            for j in range(i + 1, len(es)))

    def offending_ratio(self):
        """For a rational staircase multiple: the (p, q) with r = -p/q, q < n.

        Returns None when the vector is dominant or not of that shape.
        """
        if self.r is None or isinstance(self.r, RationalFunction):
            return None
        r = self.r
        if r >= 0:
            return None
        p, q = -r.numerator, r.denominator
        if 1 <= q <= self.n - 1:
            return (p, q)
        return None

    def key(self):
        return tuple(scalar_key(e) for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, ShiftVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ShiftVector({list(self.entries)})"


# -- exact linear solving -----------------------------------------------------

def _clear_rows(rows):
    """Make every row polynomial: multiply by the lcm of its denominators.

    Row scaling does not change the solution set.  Returns rows whose
    entries are all Fraction or all UniPoly over one parameter.
    """
    out = []
    for row in rows:
        lcm = common_denominator(row)
        if lcm is None:
            if any(isinstance(v, RationalFunction) for v in row):
                param = next(v.param for v in row
                             if isinstance(v, RationalFunction))
                out.append([v.num if isinstance(v, RationalFunction)
                            else UniPoly.const(param, v) for v in row])
            else:
                out.append(list(row))
            continue
        new = []
        for v in row:
            if isinstance(v, RationalFunction):
                new.append(v.num * lcm.exact_div(v.den)
                           if not v.den.is_constant() else v.num * lcm)
            else:
                new.append(lcm * v)
        out.append(new)
    return out


def _degree_of(e):
    return e.degree() if isinstance(e, UniPoly) else 0


def _exact_div(a, b):
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    return a / b


def _field_div(a, b):
    if isinstance(b, UniPoly):
        if isinstance(a, UniPoly):
            return RationalFunction(a, b)
        return a / b  # a is already a RationalFunction
    return a / b


def solve_linear(A, B):
    """Solve A x = b for every column b of B, exactly.

    A is square over scalars; B is a list of rows (same height as A).
    Fraction-free forward elimination, pivots chosen of minimal degree,
    then back-substitution in the fraction field.  Returns the solution
    columns.  Raises NonDominantError on a singular matrix, since in this
    package that always means a failed dominance precondition.
    """
    k = len(A)
    m = len(B[0]) if k and B else 0
    aug = _clear_rows([list(A[i]) + list(B[i]) for i in range(k)])
    prev = None
    for col in range(k):
        piv, best = None, None
        for rr in range(col, k):
            e = aug[rr][col]
            if e:
                d = _degree_of(e)
                if best is None or d < best:
                    piv, best = rr, d
        if piv is None:
            raise NonDominantError("singular interpolation system")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        for rr in range(col + 1, k):
            q = aug[rr][col]
            row = aug[rr]
            top = aug[col]
            if q:
                for cc in range(col + 1, k + m):
                    val = p * row[cc] - q * top[cc]
                    row[cc] = _exact_div(val, prev) if prev is not None else val
            else:
                for cc in range(col + 1, k + m):
                    val = p * row[cc]
                    row[cc] = _exact_div(val, prev) if prev is not None else val
            row[col] = 0
        prev = p
    cols = []
    for j in range(m):
        x = [None] * k
        for i in range(k - 1, -1, -1):
            s = aug[i][k + j]
            for jj in range(i + 1, k):
                if aug[i][jj] and x[jj]:
                    s = s - aug[i][jj] * x[jj]
            x[i] = _field_div(s, aug[i][i])
        cols.append(x)
    return cols


# -- interpolation proper -----------------------------------------------------

_BASIS_CACHE = {}


def _node_matrix(n, rho, basis):
    ms = [SymPoly.basis(n, nu) for nu in basis]
    return [[m.evaluate(rho.point(mu)) for m in ms] for mu in basis]


def interpolation_basis(n, d, rho):
    """All P_lam for |lam| = d at once; cached per (n, d, rho).

    One fraction-free solve covers every right-hand side of the degree.
    """
    key = (n, d, rho.key())
    got = _BASIS_CACHE.get(key)
    if got is not None:
        return got
    if rho.n != n:
        raise ValueError("shift vector has wrong length")
    if not rho.is_d_dominant(d):
        raise NonDominantError(f"shift vector is not {d}-dominant")
    basis = enumerate_upto(n, d)
    tops = enumerate_exact(n, d)
    A = _node_matrix(n, rho, basis)
    index = {mu: i for i, mu in enumerate(basis)}
    B = [[0] * len(tops) for _ in basis]
    for j, lam in enumerate(tops):
        B[index[lam]][j] = rho_hook_product(lam, rho.entries)
    cols = solve_linear(A, B)
    out = {}
    for j, lam in enumerate(tops):
        f = SymPoly(n, {nu: c for nu, c in zip(basis, cols[j])})
        if f.coefficient(lam) != 1:
            raise ArithmeticError(
                f"hook-product normalization did not give a unit leading "
                f"coefficient for {lam}")
        out[lam] = f
    _BASIS_CACHE[key] = out
    return out


def interpolation_polynomial(lam, rho):
    """P_lam for the given shift vector."""
    lam = as_partition(lam, rho.n)
    return interpolation_basis(rho.n, sum(lam), rho)[lam]


def interpolate(n, d, values, rho):
    """The symmetric polynomial of degree <= d with prescribed node values.

    values maps every partition of degree <= d (padded to n parts) to a
    scalar.  Needs a d-dominant rho; the solution is then unique.
    """
    basis = enumerate_upto(n, d)
    vals = {as_partition(mu, n): _lift(c) for mu, c in values.items()}
    if set(vals) != set(basis):
        raise ValueError("values must be keyed by the partitions of degree <= d")
    if rho.n != n:
        raise ValueError("shift vector has wrong length")
    if not rho.is_d_dominant(d):
        raise NonDominantError(f"shift vector is not {d}-dominant")
    A = _node_matrix(n, rho, basis)
    B = [[vals[mu]] for mu in basis]
    col = solve_linear(A, B)[0]
    return SymPoly(n, {nu: c for nu, c in zip(basis, col)})


def interpolate_recursive(n, d, values, rho):
    """Same contract as interpolate, built by the two-branch recursion.

    Nodes with an empty last row reduce to n - 1 variables under the
    shift differences rho_i - rho_n; the rest divide out the product of
    (x_i - rho_n) and reduce to degree d - n after shifting x by 1.
    Entirely independent of the linear solver, so the two construction
    routes cross-check each other.
    """
    basis = enumerate_upto(n, d)
    vals = {as_partition(mu, n): _lift(c) for mu, c in values.items()}
    if set(vals) != set(basis):
        raise ValueError("values must be keyed by the partitions of degree <= d")
    if rho.n != n:
        raise ValueError("shift vector has wrong length")
    if not rho.is_d_dominant(d):
        raise NonDominantError(f"shift vector is not {d}-dominant")
    return _interp_rec(n, d, vals, rho)


def _interp_rec(n, d, vals, rho):
    if n == 0:
        return SymPoly(0, {(): vals[()]})
    last = rho.entries[-1]
    # branch one: nodes whose last part is zero live in n - 1 variables
    sub_rho = ShiftVector.generic([e - last for e in rho.entries[:-1]])
    sub_vals = {mu[:-1]: vals[mu] for mu in vals if mu[-1] == 0}
    g = _interp_rec(n - 1, d, sub_vals, sub_rho)
    g_ext = SymPoly(n, {mu + (0,) * (n - len(mu)): c
                        for mu, c in g.terms.items()})
    g_shift = g_ext.to_sparse().translate([last] * n)
    if d < n:
        return collect_symmetric(g_shift)
    # branch two: the rest divide by prod(x_i - rho_n) after the g part
    # is subtracted, and reduce to degree d - n
    h_vals = {}
    for mu in vals:
        if mu[-1] == 0:
            continue
        pt = rho.point(mu)
        denom = Fraction(1)
        for x in pt:
            denom = denom * (x - last)
        if not denom:
            raise NonDominantError(
                f"node {mu} makes the reduction factor vanish")
        h_vals[tuple(p - 1 for p in mu)] = \
            (vals[mu] - g_shift.evaluate(pt)) / denom
    h = _interp_rec(n, d - n, h_vals, rho)
    factor = SparsePoly.const(n, Fraction(1))
    for i in range(n):
        factor = factor * (SparsePoly.variable(n, i) - last)
    h_shift = h.to_sparse().translate([Fraction(1)] * n)
    return collect_symmetric(g_shift + factor * h_shift)


def first_column_reduction(lam, rho):
    """P_lam rebuilt from P_(lam - (1,..,1)) when every part is positive.

    The full first column splits off as the product of (x_i - rho_n) and
    the smaller polynomial is evaluated at x - 1.
    """
    lam = as_partition(lam, rho.n)
    if lam[-1] < 1:
        raise ValueError(f"{lam} does not contain a full first column")
    n = rho.n
    last = rho.entries[-1]
    inner = interpolation_polynomial(tuple(p - 1 for p in lam), rho)
    factor = SparsePoly.const(n, Fraction(1))
    for i in range(n):
        factor = factor * (SparsePoly.variable(n, i) - last)
    return collect_symmetric(factor * inner.to_sparse().translate([Fraction(1)] * n))


def column_forms(k, rho):
    """The two closed forms of the one-column P_(1^k), as a pair.

    First form: sum of (-1)^(k-j) h_{k-j}(rho_k..rho_n) e_j.  Second form:
    sum over index sets i_1 < .. < i_k of prod_j (x_{i_j} - rho_{i_j+k-j}).
    They agree identically in rho; callers can compare.
    """
    n = rho.n
    if not 0 <= k <= n:
        raise ValueError(f"column height {k} out of range for n={n}")
    tail = list(rho.entries[k - 1:]) if k >= 1 else []
    first = SymPoly.zero(n)
    for j in range(k + 1):
        c = complete_eval(k - j, tail) * (Fraction(-1) ** (k - j))
        first = first + elementary(j, n) * c
    second = SparsePoly.zero(n)
    for rows in combinations(range(1, n + 1), k):
        term = SparsePoly.const(n, Fraction(1))
        for pos, i in enumerate(rows, start=1):
            shift = rho.entries[i + k - pos - 1]
            term = term * (SparsePoly.variable(n, i - 1) - shift)
        second = second + term
    return first, collect_symmetric(second)


def factorial_schur(lam, n):
    """Quotient of the falling-power alternant by the Vandermonde."""
    lam = as_partition(lam, n)
    delta = staircase(n)
    powers = [lam[j] + delta[j] for j in range(n)]
    det = SparsePoly.zero(n)
    for sigma in _signed_permutations(n):
        perm, sign = sigma
        term = SparsePoly.const(n, Fraction(sign))
        for i in range(n):
            term = term * falling_power(n, i, powers[perm[i]])
        det = det + term
    return collect_symmetric(divide_by_vandermonde(det))


def _signed_permutations(n):
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if perm[a] > perm[b])
        yield perm, (-1) ** inv


def factorial_monomial_sym(lam, n):
    """The zero-shift case: orbit sums of falling powers, collected."""
    return collect_symmetric(factorial_monomial(n, lam))


def single_row(d, r, n):
    """One-row P_(d) from the explicit chain sum over d >= i_1 >= ... >= 0.

    Each chain contributes binomials in -r times falling powers of the
    shifted variables; the total is normalized by binom(-r, d).
    """
    r = _lift(r)
    lead = binom_scalar(-r, d)
    if not lead:
        raise ValueError(f"binom(-r, {d}) vanishes for r={r}")
    delta = staircase(n)
    total = SparsePoly.zero(n)
    for asc in combinations_with_replacement(range(d + 1), n - 1):
        chain = (d,) + tuple(reversed(asc)) + (0,)
        term = SparsePoly.const(n, Fraction(1))
        for j in range(1, n + 1):
            step = chain[j - 1] - chain[j]
            term = term * binom_scalar(-r, step)
            if not term:
                break
            term = term * falling_power(n, j - 1, step,
                                        offset=r * delta[j - 1] + chain[j])
        if term:
            total = total + term
    result = collect_symmetric(total)
    return result.map_coeffs(lambda c: c / lead)
