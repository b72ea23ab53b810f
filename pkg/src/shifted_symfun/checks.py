"""Named verification suites.

Each check replays one of the library's structural guarantees over an
exhaustive or seeded-random range and returns a small report dict:

    {"schema": 1, "check": name, "params": {...},
     "status": "pass" | "fail", "witness": None | {...}}

The first counterexample, if any, is serialized into the witness.  The
CLI exposes these by name; the acceptance tests drive the same functions
at their full documented ranges.
"""

import random
from fractions import Fraction

from .interpolation import (ShiftVector, column_forms, factorial_monomial_sym,
                            factorial_schur, first_column_reduction,
                            interpolate, interpolate_recursive,
                            interpolation_basis, interpolation_polynomial,
                            single_row)
from .jack import (alpha_gen, jack_J, jack_P, jack_P_at, jack_P_eigen,
                   pieri_verify)
from .operators import (OperatorMatrix, apply_difference_family,
                        apply_raising, cutoff_phi, eigenvalue_poly,
                        inhomogeneous_lift, operator_matrix)
from .partitions import (contains, dominance_less, enumerate_exact,
                         enumerate_upto, hook_product_lower, is_partition,
                         pieri_coefficient, rho_hook_product)
from .scalars import RationalFunction
from .sympoly import SymPoly, elementary

DEFAULT_SEED = 20260814


def _sym_r():
    return RationalFunction.gen("r")


def _rho(n, r):
    if r == "symbolic" or r is None:
        return ShiftVector.staircase_multiple(n, _sym_r())
    return ShiftVector.staircase_multiple(n, Fraction(r))


def _r_label(r):
    return "symbolic" if (r == "symbolic" or r is None) else str(Fraction(r))


def _report(name, params, witness=None):
    return {"schema": 1, "check": name, "params": params,
            "status": "pass" if witness is None else "fail",
            "witness": witness}


def _w(**kw):
    """Witness dict with everything stringified for JSON."""
    out = {}
    for k, v in kw.items():
        if isinstance(v, tuple):
            out[k] = list(v)
        elif isinstance(v, (int, str, list, bool)) or v is None:
            out[k] = v
        else:
            out[k] = str(v)
    return out


def check_vanishing(n, dmax, r="symbolic"):
    """Vanishing at foreign nodes plus the hook-product normalization."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    for d in range(dmax + 1):
        nodes = enumerate_upto(n, d)
        for lam, P in interpolation_basis(n, d, rho).items():
            for mu in nodes:
                val = P.evaluate(rho.point(mu))
                if mu == lam:
                    want = rho_hook_product(lam, rho.entries)
                    if val != want:
                        return _report("vanishing", params, _w(
                            kind="normalization", lam=lam, value=val, want=want))
                elif val:
                    return _report("vanishing", params, _w(
                        kind="vanishing", lam=lam, mu=mu, value=val))
    return _report("vanishing", params)


def check_unitriangular(n, dmax, r="symbolic"):
    """Unit m_lam coefficient; every other term strictly below in dominance."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    for d in range(dmax + 1):
        for lam, P in interpolation_basis(n, d, rho).items():
            if P.coefficient(lam) != 1:
                return _report("unitriangular", params, _w(
                    kind="leading", lam=lam, value=P.coefficient(lam)))
            for mu in P.terms:
                if mu != lam and not dominance_less(mu, lam):
                    return _report("unitriangular", params, _w(
                        kind="dominance", lam=lam, mu=mu))
    return _report("unitriangular", params)


def _random_fraction(rng, lo=-30, hi=30, dens=(1, 2, 3, 5, 7)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def _random_dominant_entries(rng, n):
    """Strictly decreasing positive rationals; always dominant."""
    entries = [_random_fraction(rng, 1, 12)]
    for _ in range(n - 1):
        entries.append(entries[-1] + Fraction(rng.randint(1, 12),
                                              rng.choice((1, 2, 3, 5, 7))))
    entries.reverse()
    return tuple(entries)


def check_special_forms(n, dmax, trials=6, seed=DEFAULT_SEED):
    """The four closed forms against the direct solve.

    (a) zero shift: factorial monomials; (b) unit staircase: factorial
    Schur quotients; (c) one-column forms, symbolic and at random shift
    vectors; (d) the one-row chain sum.
    """
    params = {"n": n, "dmax": dmax, "trials": trials, "seed": seed}
    rho0 = _rho(n, 0)
    rho1 = _rho(n, 1)
    for d in range(dmax + 1):
        for lam in enumerate_exact(n, d):
            if factorial_monomial_sym(lam, n) != interpolation_polynomial(lam, rho0):
                return _report("special-forms", params, _w(part="r=0", lam=lam))
            if factorial_schur(lam, n) != interpolation_polynomial(lam, rho1):
                return _report("special-forms", params, _w(part="r=1", lam=lam))
    rho_sym = _rho(n, "symbolic")
    rng = random.Random(seed)
    shift_vectors = [rho_sym]
    for _ in range(trials):
        shift_vectors.append(ShiftVector.generic(_random_dominant_entries(rng, n)))
    for _ in range(max(3, trials // 2)):
        shift_vectors.append(ShiftVector.generic(
            tuple(_random_fraction(rng) for _ in range(n))))
    for rho in shift_vectors:
        for k in range(1, n + 1):
            first, second = column_forms(k, rho)
            if first != second:
                return _report("special-forms", params, _w(
                    part="one-column", k=k, rho=[str(e) for e in rho.entries]))
            if rho.is_d_dominant(k):
                if first != interpolation_polynomial((1,) * k, rho):
                    return _report("special-forms", params, _w(
                        part="one-column-vs-solve", k=k,
                        rho=[str(e) for e in rho.entries]))
    for r in ("symbolic", Fraction(5, 3)):
        rho = _rho(n, r)
        rr = _sym_r() if r == "symbolic" else r
        for d in range(1, dmax + 1):
            lam = (d,) + (0,) * (n - 1)
            if single_row(d, rr, n) != interpolation_polynomial(lam, rho):
                return _report("special-forms", params, _w(
                    part="one-row", d=d, r=_r_label(r)))
    return _report("special-forms", params)


def check_uniqueness(n, dmax, trials=5, seed=DEFAULT_SEED):
    """Direct solve vs the recursive construction on random data."""
    params = {"n": n, "dmax": dmax, "trials": trials, "seed": seed}
    rng = random.Random(seed)
    for nn in range(1, n + 1):
        for d in range(dmax + 1):
            vectors = []
            while len(vectors) < trials:
                entries = tuple(_random_fraction(rng, -20, 20)
                                for _ in range(nn))
                rho = ShiftVector.generic(entries)
                if rho.is_dominant():
                    vectors.append(rho)
            for rho in vectors:
                values = {mu: _random_fraction(rng, -9, 9)
                          for mu in enumerate_upto(nn, d)}
                direct = interpolate(nn, d, values, rho)
                rebuilt = interpolate_recursive(nn, d, values, rho)
                if direct != rebuilt:
                    return _report("uniqueness", params, _w(
                        n=nn, d=d, rho=[str(e) for e in rho.entries]))
    return _report("uniqueness", params)


def check_eigenvalue(n, dmax, r="symbolic"):
    """The generating family acts diagonally with the product eigenvalue."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    rr = _sym_r() if (r == "symbolic" or r is None) else Fraction(r)
    for d in range(dmax + 1):
        for lam, P in interpolation_basis(n, d, rho).items():
            family = apply_difference_family(P, rr)
            eig = eigenvalue_poly(lam, rr, n)
            for p in range(n + 1):
                got = family.get(p, SymPoly.zero(n))
                want = P * eig.coefficient(p)
                if got != want:
                    return _report("eigenvalue", params, _w(
                        lam=lam, t_power=p))
    return _report("eigenvalue", params)


def check_commutativity(n, dmax, r="symbolic"):
    """All pairs commute, in both operator families, as exact matrices."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rr = _sym_r() if (r == "symbolic" or r is None) else Fraction(r)
    basis = enumerate_upto(n, dmax)
    columns = [apply_difference_family(SymPoly.basis(n, mu), rr)
               for mu in basis]
    index = {mu: i for i, mu in enumerate(basis)}
    mats = {}
    for k in range(1, n + 1):
        rows = [[0] * len(basis) for _ in basis]
        for j, fam in enumerate(columns):
            img = fam.get(n - k, SymPoly.zero(n))
            for lam, c in img.terms.items():
                rows[index[lam]][j] = c
        mats[k] = OperatorMatrix(basis, basis, rows)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not (mats[i] @ mats[j] - mats[j] @ mats[i]).is_zero():
                return _report("commutativity", params, _w(
                    family="difference", i=i, j=j))
    raising = {}

    def raise_mat(k, d):
        got = raising.get((k, d))
        if got is None:
            got = operator_matrix("raising", n, d, rr, k=k)
            raising[(k, d)] = got
        return got

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ij = raise_mat(i, dmax + j) @ raise_mat(j, dmax)
            ji = raise_mat(j, dmax + i) @ raise_mat(i, dmax)
            if not (ij - ji).is_zero():
                return _report("commutativity", params, _w(
                    family="raising", i=i, j=j))
    return _report("commutativity", params)


def check_cutoff(n, dmax, r="symbolic"):
    """Cut-off determinants vanish where the shifted index set breaks."""
    from itertools import combinations
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    rr = _sym_r() if (r == "symbolic" or r is None) else Fraction(r)
    phis = {}
    for size in range(n + 1):
        for rows in combinations(range(n), size):
            phis[rows] = cutoff_phi(rows, n, rr)
    for mu in enumerate_upto(n, dmax):
        pt = rho.point(mu)
        for rows, phi in phis.items():
            shifted = list(mu)
            for i in rows:
                shifted[i] -= 1
            if is_partition(shifted):
                continue
            val = phi.evaluate(pt)
            if val:
                return _report("cutoff", params, _w(
                    mu=mu, rows=list(rows), value=val))
    return _report("cutoff", params)


def check_raising_stability(n, dmax, r="symbolic"):
    """Raising by k lands in degree d + k with top component e_k times the input."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rr = _sym_r() if (r == "symbolic" or r is None) else Fraction(r)
    for mu in enumerate_upto(n, dmax):
        f = SymPoly.basis(n, mu)
        for k in range(1, n + 1):
            img = apply_raising(f, k, rr)
            if img.degree() > sum(mu) + k:
                return _report("raising-stability", params, _w(
                    mu=mu, k=k, degree=img.degree()))
            if img.top_component() != elementary(k, n) * f:
                return _report("raising-stability", params, _w(
                    mu=mu, k=k, kind="top-component"))
    return _report("raising-stability", params)


def check_degree_bound(n, dmax, r="symbolic", trials=6, seed=DEFAULT_SEED):
    """The difference family never raises degree, on random inputs."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r),
              "trials": trials, "seed": seed}
    rr = _sym_r() if (r == "symbolic" or r is None) else Fraction(r)
    rng = random.Random(seed)
    pool = enumerate_upto(n, dmax)
    for _ in range(trials):
        terms = {mu: _random_fraction(rng, -9, 9)
                 for mu in rng.sample(pool, k=min(4, len(pool)))}
        f = SymPoly(n, terms)
        if f.is_zero():
            continue
        family = apply_difference_family(f, rr)
        for p, g in family.items():
            if g.degree() > f.degree():
                return _report("degree-bound", params, _w(
                    terms=[list(t) for t in terms], t_power=p,
                    degree=g.degree()))
    return _report("degree-bound", params)


def check_extra_vanishing(n, dmax, r="symbolic"):
    """Vanishing at every node whose partition does not contain lam."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    nodes = enumerate_upto(n, dmax)
    for lam in nodes:
        P = interpolation_polynomial(lam, rho)
        for mu in nodes:
            if contains(lam, mu):
                continue
            val = P.evaluate(rho.point(mu))
            if val:
                return _report("extra-vanishing", params, _w(
                    lam=lam, mu=mu, value=val))
    return _report("extra-vanishing", params)


def check_ideal_stability(n, dmax, r="symbolic", generator=None):
    """The span attached to an up-closed partition set behaves like its ideal.

    Members vanish at every node outside the set; the diagonal values are
    nonzero, so the members are independent and the vanishing conditions
    cut out exactly their span in each degree.
    """
    if generator is None:
        generator = (1,) * min(2, n)
    params = {"n": n, "dmax": dmax, "r": _r_label(r),
              "generator": list(generator)}
    rho = _rho(n, r)
    nodes = enumerate_upto(n, dmax)
    members = [lam for lam in nodes if contains(generator, lam)]
    outside = [mu for mu in nodes if not contains(generator, mu)]
    for lam in members:
        P = interpolation_polynomial(lam, rho)
        if not rho_hook_product(lam, rho.entries):
            return _report("ideal-stability", params, _w(
                kind="degenerate-node", lam=lam))
        for mu in outside:
            if P.evaluate(rho.point(mu)):
                return _report("ideal-stability", params, _w(
                    lam=lam, mu=mu))
    return _report("ideal-stability", params)


def check_jack_agreement(n, dmax):
    """Both Jack constructions coincide; alpha = 1 lands on Schur forms."""
    params = {"n": n, "dmax": dmax}
    for nn in range(1, n + 1):
        for lam in enumerate_upto(nn, dmax):
            a = jack_P(lam, nn)
            b = jack_P_eigen(lam, nn)
            if a != b:
                return _report("jack-agreement", params, _w(
                    n=nn, lam=lam, kind="construction-mismatch"))
            schur = factorial_schur(lam, nn).top_component()
            if jack_P_at(lam, nn, Fraction(1)) != schur:
                return _report("jack-agreement", params, _w(
                    n=nn, lam=lam, kind="alpha=1"))
            scaled = jack_J(lam, nn).map_coeffs(
                lambda c: c.substitute(Fraction(1))
                if isinstance(c, RationalFunction) else c)
            if scaled != schur * hook_product_lower(lam, Fraction(1)):
                return _report("jack-agreement", params, _w(
                    n=nn, lam=lam, kind="integral-form-alpha=1"))
    return _report("jack-agreement", params)


def check_lift(n, dmax):
    """Substituting raising operators into the e-expansion recovers the family."""
    params = {"n": n, "dmax": dmax}
    r = _sym_r()
    rho = ShiftVector.staircase_multiple(n, r)
    for lam in enumerate_upto(n, dmax):
        jack_r = jack_P_eigen(lam, n, alpha=1 / r)
        lifted = inhomogeneous_lift(jack_r, r)
        if lifted != interpolation_polynomial(lam, rho):
            return _report("lift", params, _w(lam=lam))
    return _report("lift", params)


def check_pieri(n, dmax):
    """Vertical-strip expansion of e_k times a Jack polynomial."""
    params = {"n": n, "dmax": dmax}
    alpha = alpha_gen()
    golden = pieri_coefficient((1, 1), (1, 0), alpha)
    want = 2 * alpha / (alpha + 1)
    if golden != want:
        return _report("pieri", params, _w(kind="golden-coefficient",
                                           value=golden, want=want))
    for mu in enumerate_upto(n, dmax):
        for k in range(1, n + 1):
            ok, residual = pieri_verify(mu, k, n)
            if not ok:
                return _report("pieri", params, _w(
                    mu=mu, k=k, residual=repr(residual)))
    return _report("pieri", params)


def check_reduction(n, dmax, r="symbolic"):
    """Full-column split: P_lam against its first-column reduction."""
    params = {"n": n, "dmax": dmax, "r": _r_label(r)}
    rho = _rho(n, r)
    for d in range(n, dmax + 1):
        for lam in enumerate_exact(n, d):
            if lam[-1] < 1:
                continue
            if first_column_reduction(lam, rho) != interpolation_polynomial(lam, rho):
                return _report("reduction", params, _w(lam=lam))
    return _report("reduction", params)


# name -> (function, takes an r argument)
CHECKS = {
    "vanishing": (check_vanishing, True),
    "unitriangular": (check_unitriangular, True),
    "special-forms": (check_special_forms, False),
    "uniqueness": (check_uniqueness, False),
    "eigenvalue": (check_eigenvalue, True),
    "commutativity": (check_commutativity, True),
    "cutoff": (check_cutoff, True),
    "raising-stability": (check_raising_stability, True),
    "degree-bound": (check_degree_bound, True),
    "extra-vanishing": (check_extra_vanishing, True),
    "ideal-stability": (check_ideal_stability, True),
    "reduction": (check_reduction, True),
    "jack-agreement": (check_jack_agreement, False),
    "lift": (check_lift, False),
    "pieri": (check_pieri, False),
}


def run_check(name, n, dmax, r=None):
    """Dispatch one named check; r applies only where meaningful."""
    try:
        fn, takes_r = CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}") from None
    if takes_r:
        return fn(n, dmax, r=r if r is not None else "symbolic")
    if r not in (None, "symbolic"):
        raise ValueError(f"check {name!r} does not take a rational r")
    return fn(n, dmax)
