"""Determinantal difference operators acting on symmetric polynomials.

The generating family is a determinant in a formal variable t whose
expansion over variable subsets I pairs a coefficient polynomial d_I with
the shift f(x) -> f(x - eps_I).  Dividing by the Vandermonde determinant
and collecting per power of t yields one operator per t-degree; the
top coefficient is the identity.  The companion triangular family (the
raising operators) drops the t variable and uses the cut-off determinants
phi_I instead; it raises polynomial degree by the size of I.

A differential relative (the Sekiguchi-Debiard determinant) acts on the
monomial basis directly and is used to pin down the homogeneous
eigenfunctions that the top components of the interpolation family hit.
"""

from fractions import Fraction
from itertools import combinations, permutations

from .partitions import enumerate_upto, staircase
from .scalars import UniPoly, _lift, common_denominator, scalar_key
from .sympoly import (SparsePoly, SymPoly, collect_symmetric,
                      collect_symmetric_t, divide_by_vandermonde,
                      e_basis_expand, elementary_eval)


def _signed_perms(n):
    out = []
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if perm[a] > perm[b])
        out.append((perm, (-1) ** inv))
    return out


def _binomial_power(n, i, base_shift, e, has_t):
    """(x_i + base_shift)^e as a SparsePoly."""
    out = SparsePoly.const(n, Fraction(1), has_t)
    xi = SparsePoly.variable(n, i)
    if has_t:
        xi = xi.with_t()
    for _ in range(e):
        out = out * (xi + base_shift)
    return out


def cutoff_phi(rows, n, r):
    """Cut-off determinant phi_I for the 0-based index set I = rows.

    Row i inside I carries x_i^(delta_j + 1); outside, (x_i + r)^delta_j.
    Vanishes at mu + r*delta whenever mu - eps_I is not a partition.
    """
    rows = frozenset(rows)
    delta = staircase(n)
    r = _lift(r)
    det = SparsePoly.zero(n)
    for perm, sign in _signed_perms(n):
        term = SparsePoly.const(n, Fraction(sign))
        for i in range(n):
            dj = delta[perm[i]]
            if i in rows:
                key = [0] * n
                key[i] = dj + 1
                term = term * SparsePoly(n, {tuple(key): Fraction(1)})
            else:
                term = term * _binomial_power(n, i, r, dj, False)
        det = det + term
    return det


def _subset_coefficient(rows, n, r):
    """d_I: the subset coefficient of the generating determinant, with t."""
    rows = frozenset(rows)
    delta = staircase(n)
    r = _lift(r)
    t = SparsePoly.t_var(n)
    det = SparsePoly.zero(n, has_t=True)
    for perm, sign in _signed_perms(n):
        term = SparsePoly.const(n, Fraction(sign), has_t=True)
        for i in range(n):
            dj = delta[perm[i]]
            if i in rows:
                key = [0] * n
                key[i] = dj + 1
                term = term * SparsePoly(n, {tuple(key) + (0,): Fraction(-1)},
                                         has_t=True)
            else:
                xi = SparsePoly.variable(n, i).with_t()
                term = term * (xi + t) * _binomial_power(n, i, r, dj, True)
        det = det + term
    return det


_DI_CACHE = {}
_PHI_CACHE = {}


def _subset_family(n, r):
    key = (n, scalar_key(_lift(r)))
    got = _DI_CACHE.get(key)
    if got is None:
        got = [(rows, _subset_coefficient(rows, n, r))
               for size in range(n + 1)
               for rows in combinations(range(n), size)]
        _DI_CACHE[key] = got
    return got


def _phi_family(n, r, size):
    key = (n, scalar_key(_lift(r)), size)
    got = _PHI_CACHE.get(key)
    if got is None:
        got = [(rows, cutoff_phi(rows, n, r))
               for rows in combinations(range(n), size)]
        _PHI_CACHE[key] = got
    return got


def _clear(f):
    """Factor a common denominator out of the coefficients of f.

    Returns (g, lcm) with f = g / lcm and g polynomial over the parameter,
    so the heavy sparse products stay gcd-free.  lcm is None when there
    was nothing to clear.
    """
    lcm = common_denominator(f.terms.values())
    if lcm is None:
        return f, None
    return f.map_coeffs(lambda c: c * lcm), lcm


def _unclear(f, lcm):
    if lcm is None:
        return f
    return f.map_coeffs(lambda c: c / lcm)


def _shifted(sparse, rows):
    deltas = [1 if i in rows else 0 for i in range(sparse.n)]
    if not any(deltas):
        return sparse
    return sparse.translate(deltas)


def apply_difference_family(f, r):
    """Apply the full t-family to a SymPoly: {t_power: SymPoly}.

    The t^n piece is f itself (the family is monic in t); lower pieces
    are the nontrivial operators.  Degrees never go up.
    """
    n = f.n
    g, lcm = _clear(f)
    src = g.to_sparse(has_t=True)
    total = SparsePoly.zero(n, has_t=True)
    for rows, d_i in _subset_family(n, r):
        total = total + d_i * _shifted(src, rows)
    total = divide_by_vandermonde(total)
    out = collect_symmetric_t(total)
    return {p: _unclear(q, lcm) for p, q in out.items()}


def apply_difference_component(f, k, r):
    """The t^(n-k) member of the family; k = 0 is the identity."""
    if not 0 <= k <= f.n:
        raise ValueError(f"component index {k} out of range")
    fam = apply_difference_family(f, r)
    return fam.get(f.n - k, SymPoly.zero(f.n))


def apply_raising(f, k, r):
    """The k-th raising operator: degree d input lands in degree <= d + k.

    On top components it acts as multiplication by e_k.
    """
    n = f.n
    if not 0 <= k <= n:
        raise ValueError(f"raising index {k} out of range")
    g, lcm = _clear(f)
    src = g.to_sparse()
    total = SparsePoly.zero(n)
    for rows, phi in _phi_family(n, r, k):
        total = total + phi * _shifted(src, rows)
    total = divide_by_vandermonde(total)
    return _unclear(collect_symmetric(total), lcm)


def eigenvalue_poly(lam, r, n):
    """prod_i (lam_i + r*delta_i + t) as a polynomial in t."""
    r = _lift(r)
    delta = staircase(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    out = UniPoly.const("t", Fraction(1))
    for i in range(n):
        c = lam[i] + r * delta[i]
        out = out * UniPoly("t", (c, Fraction(1)))
    return out


def apply_sekiguchi_debiard(f, r, t_value=None):
    """Apply the differential determinant, per monomial and permutation.

    With t_value None the result is {t_power: SymPoly}; otherwise t is
    specialized first and a single SymPoly comes back.  Homogeneous
    degrees are preserved.
    """
    n = f.n
    delta = staircase(n)
    r = _lift(r)
    has_t = t_value is None
    g, lcm = _clear(f)
    src = g.to_sparse()
    acc = {}
    perms = _signed_perms(n)
    for key, c in src.terms.items():
        for perm, sign in perms:
            consts = [r * delta[perm[i]] + key[i] for i in range(n)]
            if t_value is not None:
                consts = [cc + t_value for cc in consts]
            new_key = tuple(key[i] + delta[perm[i]] for i in range(n))
            if has_t:
                for p in range(n + 1):
                    ek = elementary_eval(n - p, consts)
                    if ek:
                        kk = new_key + (p,)
                        s = acc.get(kk, 0) + sign * c * ek
                        if s:
                            acc[kk] = s
                        else:
                            acc.pop(kk, None)
            else:
                v = Fraction(1)
                for cc in consts:
                    v = v * cc
                if v:
                    s = acc.get(new_key, 0) + sign * c * v
                    if s:
                        acc[new_key] = s
                    else:
                        acc.pop(new_key, None)
    total = SparsePoly(n, acc, has_t)
    total = divide_by_vandermonde(total)
    if has_t:
        return {p: _unclear(q, lcm) for p, q in collect_symmetric_t(total).items()}
    return _unclear(collect_symmetric(total), lcm)


class OperatorMatrix:
    """Exact matrix of an operator between graded m-bases.

    Rows follow the target basis, columns the source basis; both use the
    canonical partition order, which refines dominance, so triangularity
    is visible as upper-triangular support.
    """

    __slots__ = ("source", "target", "rows")

    def __init__(self, source, target, rows):
        self.source = list(source)
        self.target = list(target)
        self.rows = rows

    @classmethod
    def build(cls, op, n, source, target):
        t_index = {mu: i for i, mu in enumerate(target)}
        cols = []
        for mu in source:
            img = op(SymPoly.basis(n, mu))
            col = [0] * len(target)
            for lam, c in img.terms.items():
                if lam not in t_index:
                    raise ArithmeticError(
                        f"image of {mu} leaves the target space at {lam}")
                col[t_index[lam]] = c
            cols.append(col)
        rows = [[cols[j][i] for j in range(len(source))]
                for i in range(len(target))]
        return cls(source, target, rows)

    def entry(self, lam, mu):
        return self.rows[self.target.index(lam)][self.source.index(mu)]

    def __matmul__(self, other):
        if other.target != self.source:
            raise ValueError("bases do not chain")
        rows = []
        for i in range(len(self.target)):
            row = []
            for j in range(len(other.source)):
                s = 0
                for k in range(len(self.source)):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        s = a * b + s
                row.append(s)
            rows.append(row)
        return OperatorMatrix(other.source, self.target, rows)

    def __sub__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("bases differ")
        rows = [[a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)]
        return OperatorMatrix(self.source, self.target, rows)

    def is_zero(self):
        return all(not e for row in self.rows for e in row)

    def is_triangular(self, order_leq):
        """Entries only where the row partition <= the column partition."""
        for i, lam in enumerate(self.target):
            for j, mu in enumerate(self.source):
                if self.rows[i][j] and not order_leq(lam, mu):
                    return False
        return True


def operator_matrix(kind, n, d, r, k=None, t_value=None):
    """Matrix of one named operator on the degree <= d slice.

    kind "difference" (square, needs k), "raising" (rectangular into
    degree d + k, needs k) or "sekiguchi" (square, needs t_value).
    """
    source = enumerate_upto(n, d)
    if kind == "difference":
        if k is None:
            raise ValueError("difference component needs k")
        return OperatorMatrix.build(
            lambda f: apply_difference_component(f, k, r), n, source, source)
    if kind == "raising":
        if k is None:
            raise ValueError("raising operator needs k")
        target = enumerate_upto(n, d + k)
        return OperatorMatrix.build(
            lambda f: apply_raising(f, k, r), n, source, target)
    if kind == "sekiguchi":
        if t_value is None:
            raise ValueError("sekiguchi matrix needs a t value")
        return OperatorMatrix.build(
            lambda f: apply_sekiguchi_debiard(f, r, t_value=t_value),
            n, source, source)
    raise ValueError(f"unknown operator kind {kind!r}")


def inhomogeneous_lift(f, r):
    """Send e_k -> k-th raising operator in the e-expansion of f, apply to 1.

    For homogeneous f the top component of the result is f again; on the
    degree-d eigenfunctions it produces the matching interpolation family.
    """
    n = f.n
    expansion = e_basis_expand(f)
    total = SymPoly.zero(n)
    for exps, c in sorted(expansion.items()):
        g = SymPoly.one(n)
        for k in range(n, 0, -1):
            for _ in range(exps[k - 1]):
                g = apply_raising(g, k, r)
        total = total + g * c
    return total
