"""Exact scalar arithmetic: rationals, univariate polynomials, rational functions.

Every coefficient in this package is one of three kinds:

  * Fraction            -- plain rational number
  * UniPoly             -- polynomial in one named parameter (r, t or alpha)
  * RationalFunction    -- quotient of two UniPoly over Fraction coefficients

A "Scalar" is a Fraction or a RationalFunction.  UniPoly shows up as the
coefficient domain of generating polynomials in t and inside RationalFunction.
Mixing scalars that live over different parameters is a bug, not a coercion
opportunity, and raises TagMismatchError.
"""

from fractions import Fraction
from math import factorial, gcd as int_gcd


class TagMismatchError(TypeError):
    """Arithmetic between scalars over different parameters."""


class PoleError(ZeroDivisionError):
    """Substitution hit a zero of a denominator."""


class ExactDivisionError(ArithmeticError):
    """A division that was promised to be exact left a remainder."""


def _as_coeff(c):
    """Normalize an incoming coefficient to Fraction or RationalFunction."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, RationalFunction):
        return c
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Coefficients are Fractions, or RationalFunctions over a different
    parameter (polynomials in t over Q(r), for instance).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs=()):
        self.var = var
        cs = [_as_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, var, c):
        return cls(var, (c,))

    @classmethod
    def gen(cls, var):
        return cls(var, (0, 1))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        """Lift other to a UniPoly in self.var, or return None."""
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise TagMismatchError(
                    f"polynomials in {self.var!r} and {other.var!r} do not mix")
            return other
        if isinstance(other, RationalFunction):
            if other.param == self.var:
                return None  # handled by RationalFunction reflected ops
            return UniPoly(self.var, (other,))
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.var, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return UniPoly(self.var, cs)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else -_lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.const(self.var, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly(self.var), self
        quo = [Fraction(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for k in range(dq, -1, -1):
            top = rem[k + len(o.coeffs) - 1]
            if not top:
                continue
            q = top / lead
            quo[k] = q
            for i, c in enumerate(o.coeffs):
                rem[k + i] = rem[k + i] - q * c
        return UniPoly(self.var, quo), UniPoly(self.var, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        return q

    def primitive(self):
        """Scale to coprime integer coefficients with positive leading one."""
        if not self.coeffs:
            return self
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            if not isinstance(c, Fraction):
                raise TypeError("primitive part needs Fraction coefficients")
            num_gcd = int_gcd(num_gcd, c.numerator)
            den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
        scale = Fraction(den_lcm, num_gcd)
        if self.coeffs[-1] < 0:
            scale = -scale
        return UniPoly(self.var, tuple(c * scale for c in self.coeffs))

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly(self.var, tuple(c / lead for c in self.coeffs))

    def gcd(self, other):
        """Monic gcd over Q[var]; keeps intermediate coefficients primitive."""
        a, b = self.primitive(), self._coerce(other).primitive()
        while not b.is_zero():
            _, r = divmod(a, b)
            a, b = b, (r if r.is_zero() else r.primitive())
        return a.monic()

    def __call__(self, value):
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                v = self.var if k == 1 else f"{self.var}^{k}"
                if c == 1:
                    body = v
                elif c == -1:
                    body = f"-{v}"
                else:
                    cs = str(c)
                    if isinstance(c, RationalFunction) or " " in cs:
                        cs = f"({cs})"
                    body = f"{cs}*{v}"
            if parts and not body.startswith("-"):
                parts.append(f" + {body}")
            elif parts:
                parts.append(f" - {body[1:]}")
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly({self.var!r}, {self.coeffs!r})"


def _lift(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


_ONE_CACHE = {}  # constant-one denominators, keyed per parameter


def _one_poly(param):
    p = _ONE_CACHE.get(param)
    if p is None:
        p = UniPoly(param, (Fraction(1),))
        _ONE_CACHE[param] = p
    return p


class RationalFunction:
    """Reduced fraction of two UniPoly over Q, denominator monic and nonzero.

    Instances are immutable and hashable; the (num, den) pair is the unique
    normal form, so == is coefficientwise comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, UniPoly):
            raise TypeError("numerator must be a UniPoly")
        if den is None:
            den = _one_poly(num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.var != den.var:
            raise TagMismatchError(
                f"numerator in {num.var!r}, denominator in {den.var!r}")
        if num.is_zero():
            den = _one_poly(num.var)
        elif den.is_constant():
            if den.coeffs[0] != 1:
                num = num * (Fraction(1) / den.coeffs[0])
                den = _one_poly(num.var)
        elif not _reduced:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                inv = Fraction(1) / lead
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @property
    def param(self):
        return self.num.var

    @classmethod
    def gen(cls, param):
        return cls(UniPoly.gen(param))

    @classmethod
    def const(cls, param, c):
        return cls(UniPoly.const(param, _lift(c)))

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_unipoly(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.param != self.param:
                raise TagMismatchError(
                    f"rational functions in {self.param!r} and {other.param!r} do not mix")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(
                UniPoly.const(self.param, _lift(other)), _reduced=True)
        if isinstance(other, UniPoly):
            if other.var == self.param:
                return RationalFunction(other, _reduced=True)
            return None  # t-polynomial over Q(r): let UniPoly handle it
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_constant() and o.den.is_constant():
            return RationalFunction(self.num + o.num, _reduced=True)
        num = self.num * o.den + o.num * self.den
        return RationalFunction(num, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_constant() and o.den.is_constant():
            return RationalFunction(self.num * o.num, _reduced=True)
        # cross-cancel so the constructor's gcd sees small inputs
        g1 = self.num.gcd(o.den) if not o.den.is_constant() else None
        g2 = o.num.gcd(self.den) if not self.den.is_constant() else None
        n1 = self.num.exact_div(g1) if g1 and g1.degree() > 0 else self.num
        d2 = o.den.exact_div(g1) if g1 and g1.degree() > 0 else o.den
        n2 = o.num.exact_div(g2) if g2 and g2.degree() > 0 else o.num
        d1 = self.den.exact_div(g2) if g2 and g2.degree() > 0 else self.den
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction(o.den, o.num)

    def __rtruediv__(self, other):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * RationalFunction(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def substitute(self, value):
        """Evaluate at a rational value of the parameter."""
        d = self.den(value)
        if not d:
            raise PoleError(f"{self} has a pole at {self.param}={value}")
        return self.num(value) / d

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.param == other.param and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (int, Fraction)):
            return self.den.is_constant() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.param, self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        ns = str(self.num)
        if self.den.is_constant():
            return ns
        if " " in ns:
            ns = f"({ns})"
        ds = str(self.den)
        if " " in ds or self.den.degree() > 0:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


# -- helpers on the Scalar union ---------------------------------------------

def is_scalar(x):
    return isinstance(x, (Fraction, RationalFunction))


def scalar_key(x):
    """Hashable cache key that separates the scalar worlds."""
    if isinstance(x, Fraction):
        return ("q", x)
    if isinstance(x, RationalFunction):
        return ("rf", x.param, x.num.coeffs, x.den.coeffs)
    raise TypeError(f"not a scalar: {x!r}")


def scalar_arith(a, b, op):
    """Strict arithmetic on tagged scalars.

    op is one of '+', '-', '*', '/'.  Both operands must live in the same
    world: two Fractions, or two RationalFunctions over the same parameter.
    Anything else raises TagMismatchError.
    """
    a, b = _lift(a), _lift(b)
    if isinstance(a, Fraction) != isinstance(b, Fraction):
        raise TagMismatchError(
            f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, RationalFunction) and a.param != b.param:
        raise TagMismatchError(
            f"parameters {a.param!r} and {b.param!r} do not mix")
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if not b:
            raise ZeroDivisionError("scalar division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(x, value):
    """Specialize the parameter of a scalar to a rational value."""
    value = _lift(value)
    if isinstance(x, (int, Fraction)):
        return _lift(x)
    if isinstance(x, RationalFunction):
        return x.substitute(value)
    if isinstance(x, UniPoly):
        return x(value)
    raise TypeError(f"cannot substitute into {type(x).__name__}")


def falling_factorial(a, m):
    """a(a-1)...(a-m+1); the empty product for m = 0."""
    if m < 0:
        raise ValueError("falling factorial needs m >= 0")
    result = Fraction(1)
    for i in range(m):
        result = result * (a - i)
    return result


def binom_scalar(a, k):
    """Binomial coefficient with an arbitrary scalar top argument."""
    if k < 0:
        return Fraction(0)
    return falling_factorial(a, k) / factorial(k)


def common_denominator(values):
    """Monic lcm of the denominators of the given scalars, or None.

    None means every value was a Fraction (nothing to clear).  Multiplying
    through by the returned polynomial makes every RationalFunction value
    polynomial, which keeps later products on the gcd-free fast path.
    """
    lcm = None
    for v in values:
        if isinstance(v, RationalFunction) and not v.den.is_constant():
            d = v.den
            if lcm is None:
                lcm = d
            else:
                g = lcm.gcd(d)
                lcm = lcm * (d.exact_div(g) if g.degree() > 0 else d)
    return lcm


def invert_parameter(x, new_param):
    """Rewrite a scalar f(p) as f(1/q) over the new parameter q.

    Fractions pass through unchanged.  For a rational function N(p)/D(p)
    the result is q^(deg D - deg N) * rev(N)(q) / rev(D)(q) where rev
    reverses the coefficient sequence.
    """
    if isinstance(x, (int, Fraction)):
        return _lift(x)
    if not isinstance(x, RationalFunction):
        raise TypeError(f"cannot invert parameter of {type(x).__name__}")
    if not x:
        return RationalFunction(UniPoly(new_param))
    rev_num = UniPoly(new_param, tuple(reversed(x.num.coeffs)))
    rev_den = UniPoly(new_param, tuple(reversed(x.den.coeffs)))
    shift = x.den.degree() - x.num.degree()
    t = UniPoly.gen(new_param)
    if shift > 0:
        rev_num = rev_num * t ** shift
    elif shift < 0:
        rev_den = rev_den * t ** (-shift)
    return RationalFunction(rev_num, rev_den)
