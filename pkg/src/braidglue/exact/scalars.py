"""Exact scalars: rationals, Laurent polynomials in ``u``, rational functions in
``u`` and prime-field residues, together with small "ring" objects that know
how to coerce, parse and format their elements.

>>> p = LaurentPoly.parse("u^-1 + 2 - u^3")
>>> p.valuation(), p.degree()
(-1, 3)
>>> str(p * LaurentPoly.u())
'1+2u-u^4'
>>> F = PrimeField(7)
>>> F(3) / F(5)
Fp(2, 7)
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational

from ..errors import DivisionByZero, ParseError


def _num(c):
    """Normalize a rational coefficient: integral Fractions become ints."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Integral):
        return int(c)
    if isinstance(c, Rational):
        return _num(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not a rational coefficient: {c!r}")


def _fmt_rational(c) -> str:
    return str(c)


def parse_rational(text: str) -> Fraction:
    s = text.strip().replace("−", "-")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


# ---------------------------------------------------------------------------
# dense helpers on ascending coefficient lists (ordinary polynomials)


def dense_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def dense_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return dense_trim(out)


def dense_divmod(a, b):
    """Euclidean division in Q[u]; ``b`` must be nonzero."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    dense_trim(r)
    db = len(b) - 1
    lead = b[-1]
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                c = c // lead
            else:
                c = _num(Fraction(c) / lead)
            q[k] = c
            for j, y in enumerate(b):
                if y:
                    r[k + j] -= c * y
    dense_trim(r)
    return dense_trim(q), r


def dense_exact_div(a, b):
    q, r = dense_divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def dense_monic(a):
    if not a:
        return []
    lead = Fraction(a[-1])
    return [_num(Fraction(x) / lead) for x in a]


def dense_gcd(a, b):
    a = dense_trim(list(a))
    b = dense_trim(list(b))
    while b:
        a, b = b, dense_monic(dense_divmod(a, b)[1])
    return dense_monic(a)


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Element of Q[u, u^-1]; stored sparsely as exponent -> nonzero coefficient."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = _num(c)
                if c:
                    e = int(e)
                    s = t.get(e, 0) + c
                    if s:
                        t[e] = _num(s)
                    else:
                        t.pop(e, None)
        self._t = t

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def u(cls):
        return cls._raw({1: 1})

    @classmethod
    def from_dense(cls, coeffs, shift=0):
        return cls._raw({i + shift: _num(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (Integral, Rational)):
            return cls.constant(x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # -- inspection
    def terms(self):
        return sorted(self._t.items())

    def coefficient(self, e):
        return self._t.get(e, 0)

    def is_zero(self):
        return not self._t

    def valuation(self):
        return min(self._t) if self._t else None

    def degree(self):
        return max(self._t) if self._t else None

    def leading_coefficient(self):
        return self._t[max(self._t)] if self._t else 0

    def is_polynomial(self):
        return not self._t or min(self._t) >= 0

    def is_monomial(self):
        return len(self._t) == 1

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self):
        return self._t.get(0, 0)

    def dense(self):
        """Coefficients u^0 .. u^deg; requires an ordinary polynomial."""
        if not self._t:
            return []
        if min(self._t) < 0:
            raise ValueError("negative exponents present")
        out = [0] * (max(self._t) + 1)
        for e, c in self._t.items():
            out[e] = c
        return out

    def shift(self, k):
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def evaluate(self, x):
        total = 0
        for e, c in self._t.items():
            total = total + c * (x**e if e >= 0 else 1 / x ** (-e))
        return total

    def substitute_inverse(self):
        """p(u) -> p(u^-1)."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (Integral, Rational)):
                other = LaurentPoly.constant(other)
            else:
                return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = _num(s)
            else:
                t.pop(e, None)
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (Integral, Rational)):
                other = LaurentPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (Integral, Rational)):
                c = _num(other)
                if not c:
                    return LaurentPoly._raw({})
                return LaurentPoly._raw({e: _num(x * c) for e, x in self._t.items()})
            return NotImplemented
        t = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _num(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("only monomials are units in Q[u,u^-1]")
            ((e, c),) = self._t.items()
            return LaurentPoly._raw({e * n: _num(Fraction(1) / Fraction(c) ** (-n))})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (Integral, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * _num(1 / Fraction(other))
        if isinstance(other, LaurentPoly):
            return self.exact_div(other)
        return NotImplemented

    def exact_div(self, other):
        """Quotient in Q[u,u^-1]; raises ArithmeticError when not divisible."""
        q, r = poly_divrem(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (Integral, Rational)):
            c = _num(other)
            return self._t == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    # -- text
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items()):
            if e == 0:
                term = _fmt_rational(c)
            else:
                mono = "u" if e == 1 else f"u^{e}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = "-" + mono
                elif isinstance(c, Fraction):
                    term = f"{c}*{mono}"
                else:
                    term = f"{c}{mono}"
            if parts and not term.startswith("-"):
                term = "+" + term
            parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    _TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(\*)?(u(?:\^\(?(-?\d+)\)?)?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        s = text.replace("−", "-").replace(" ", "")
        if not s:
            raise ParseError(f"empty polynomial literal {text!r}")
        pos = 0
        t = {}
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"bad polynomial literal {text!r} at position {pos}")
            sign, coef, star, mono, exp = m.groups()
            if not first and sign is None:
                raise ParseError(f"missing operator in {text!r} at position {pos}")
            if coef is None and mono is None:
                raise ParseError(f"dangling sign in {text!r} at position {pos}")
            if star and (coef is None or mono is None):
                raise ParseError(f"bad '*' in {text!r}")
            c = Fraction(coef) if coef is not None else Fraction(1)
            if sign == "-":
                c = -c
            e = 0 if mono is None else (1 if exp is None else int(exp))
            t[e] = t.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(t)


def poly_divrem(a: LaurentPoly, b: LaurentPoly):
    """Division with remainder, a = q*b + r.

    Ordinary polynomials divide as in Q[u].  Negative powers are first cleared
    by multiplying with powers of u (a unit), so that deg r < deg b holds for
    the shifted ordinary polynomials.

    >>> q, r = poly_divrem(LaurentPoly.parse("u^3+1"), LaurentPoly.parse("u^2-u+1"))
    >>> str(q), str(r)
    ('1+u', '0')
    """
    a = LaurentPoly.coerce(a)
    b = LaurentPoly.coerce(b)
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    ka = max(0, -(a.valuation() or 0)) if not a.is_zero() else 0
    kb = max(0, -b.valuation())
    q, r = dense_divmod(a.shift(ka).dense(), b.shift(kb).dense())
    return LaurentPoly.from_dense(q, kb - ka), LaurentPoly.from_dense(r, -ka)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[u] after clearing negative powers.

    >>> str(poly_gcd(LaurentPoly.parse("1-u^2"), LaurentPoly.parse("1-u^3")))
    '-1+u'
    """
    a = LaurentPoly.coerce(a)
    b = LaurentPoly.coerce(b)
    da = a.shift(max(0, -(a.valuation() or 0))).dense() if a else []
    db = b.shift(max(0, -(b.valuation() or 0))).dense() if b else []
    return LaurentPoly.from_dense(dense_gcd(da, db))


# ---------------------------------------------------------------------------


class RationalFunction:
    """Element of Q(u) as num/den with den monic and gcd(num, den) = 1.

    Both parts are ordinary polynomials; negative powers of u are absorbed
    into the denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        k = 0
        if num:
            k = max(k, -num.valuation())
        k = max(k, -den.valuation())
        n = num.shift(k).dense() if num else []
        d = den.shift(k).dense()
        if not n:
            self.num, self.den = LaurentPoly(), LaurentPoly.constant(1)
            return
        if len(d) > 1:
            g = dense_gcd(n, d)
            if len(g) > 1:
                n = dense_exact_div(n, g)
                d = dense_exact_div(d, g)
        lead = Fraction(d[-1])
        if lead != 1:
            n = [_num(Fraction(x) / lead) for x in n]
            d = [_num(Fraction(x) / lead) for x in d]
        self.num = LaurentPoly.from_dense(n)
        self.den = LaurentPoly.from_dense(d)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        if isinstance(x, (Integral, Rational)):
            return cls._raw(LaurentPoly.constant(x), LaurentPoly.constant(1))
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {x!r} to RationalFunction")

    def is_polynomial(self):
        return self.den == 1

    def is_laurent(self):
        """True when the denominator is a power of u."""
        return self.den.is_monomial()

    def to_laurent(self):
        if not self.is_laurent():
            raise ArithmeticError(f"{self} is not a Laurent polynomial")
        return self.num * self.den ** -1

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == 0:
            raise DivisionByZero(f"pole at u={x}")
        return Fraction(self.num.evaluate(x)) / Fraction(d)

    def _binop_coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPoly, Integral, Rational)):
            return RationalFunction.coerce(other)
        return None

    def __add__(self, other):
        other = self._binop_coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            if self.den == 1:
                return RationalFunction._raw(self.num + other.num, self.den)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._binop_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._binop_coerce(other)
        if other is None:
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return RationalFunction._raw(self.num * other.num, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._binop_coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        other = self._binop_coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == 1:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        d = str(self.den)
        if len(self.num._t) > 1:
            n = f"({n})"
        if len(self.den._t) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction('{self}')"

    @classmethod
    def parse(cls, text: str):
        s = text.replace("−", "-").replace(" ", "")
        m = re.fullmatch(r"\((.*)\)/\((.*)\)|\((.*)\)/([^()]*)|([^()]*)/\((.*)\)", s)
        if m:
            g = [x for x in m.groups() if x is not None]
            return cls(LaurentPoly.parse(g[0]), LaurentPoly.parse(g[1]))
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        # a bare rational like 3/2 or a polynomial like 3/2*u + 1
        return cls(LaurentPoly.parse(s))


# ---------------------------------------------------------------------------


class Fp:
    """Residue modulo a prime p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, Fp):
            if o.p != self.p:
                from ..errors import KindMismatch

                raise KindMismatch(f"F_{self.p} vs F_{o.p}")
            return o.v
        if isinstance(o, Integral):
            return int(o) % self.p
        if isinstance(o, Rational):
            return int(o.numerator) * pow(int(o.denominator), -1, self.p) % self.p
        return None

    def __add__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else Fp(self.v + x, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else Fp(self.v - x, self.p)

    def __rsub__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else Fp(x - self.v, self.p)

    def __mul__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else Fp(self.v * x, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        x = self._other(o)
        if x is None:
            return NotImplemented
        if x == 0:
            raise DivisionByZero(f"division by 0 in F_{self.p}")
        return Fp(self.v * pow(x, -1, self.p), self.p)

    def __rtruediv__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else Fp(x, self.p) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, o):
        x = self._other(o)
        return NotImplemented if x is None else self.v == x

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __str__(self):
        return str(self.v)

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


# ---------------------------------------------------------------------------
# ring objects


class _Ring:
    name = "ring"
    is_field = True

    def __call__(self, x):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def spec(self) -> dict:
        return {"kind": self.name}

    def __eq__(self, other):
        return isinstance(other, _Ring) and self.spec() == other.spec()

    def __hash__(self):
        return hash(tuple(sorted(self.spec().items())))

    def __repr__(self):
        return f"<{self.name}>"


class RationalField(_Ring):
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (Integral, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, LaurentPoly) and x.is_constant():
            return Fraction(x.constant_term())
        if isinstance(x, RationalFunction) and x.num.is_constant() and x.den == 1:
            return Fraction(x.num.constant_term())
        raise TypeError(f"cannot coerce {x!r} to a rational")

    def parse(self, text):
        return parse_rational(text)


class RationalFunctionField(_Ring):
    name = "rational_function"

    def __init__(self):
        self.zero = RationalFunction.coerce(0)
        self.one = RationalFunction.coerce(1)
        self.u = RationalFunction.coerce(LaurentPoly.u())

    def __call__(self, x):
        return RationalFunction.coerce(x)

    def parse(self, text):
        return RationalFunction.parse(text)


class LaurentRing(_Ring):
    """Q[u, u^-1]; not a field, used for determinant work."""

    name = "laurent"
    is_field = False

    def __init__(self):
        self.zero = LaurentPoly()
        self.one = LaurentPoly.constant(1)
        self.u = LaurentPoly.u()

    def __call__(self, x):
        return LaurentPoly.coerce(x)

    def parse(self, text):
        return LaurentPoly.parse(text)


class PrimeField(_Ring):
    name = "prime"

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            from ..errors import InputError

            raise InputError(f"{p} is not prime")
        self.p = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                from ..errors import KindMismatch

                raise KindMismatch(f"F_{x.p} element given to F_{self.p}")
            return x
        if isinstance(x, Integral):
            return Fp(int(x), self.p)
        if isinstance(x, Rational):
            return Fp(int(x.numerator), self.p) / Fp(int(x.denominator), self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} to F_{self.p}")

    def parse(self, text):
        return self(parse_rational(text))

    def spec(self):
        return {"kind": "prime", "p": self.p}

    def __repr__(self):
        return f"<F_{self.p}>"


QQ = RationalField()
QQu = RationalFunctionField()
ZZu = LaurentRing()


def field_from_spec(spec) -> _Ring:
    """Build a ring object from ``{"kind": ...}``, or from a short string
    such as ``"rational"``, ``"rational_function"``, ``"prime:101"``."""
    from ..errors import InputError

    if isinstance(spec, str):
        if spec.startswith("prime"):
            _, _, p = spec.partition(":")
            return PrimeField(int(p or 101))
        spec = {"kind": spec}
    kind = spec.get("kind")
    if kind in ("rational", "Q", "QQ"):
        return QQ
    if kind in ("rational_function", "Q(u)"):
        return QQu
    if kind == "laurent":
        return ZZu
    if kind == "prime":
        if "p" not in spec:
            raise InputError("prime field needs 'p'")
        return PrimeField(spec["p"])
    raise InputError(f"unknown field kind {kind!r}")


def clearing_shift(a: LaurentPoly) -> int:
    """Smallest k >= 0 with u^k * a an ordinary polynomial."""
    return max(0, -a.valuation()) if a else 0


def reduce_mod(a, m) -> LaurentPoly:
    """Canonical residue of a in Q[u]/(m), deg < deg m.

    Negative powers are cleared with u^k (k = ``clearing_shift(a)``) and the
    factor u^-k is put back using the inverse of u modulo m.

    >>> phi6 = LaurentPoly.parse("u^2-u+1")
    >>> str(reduce_mod(LaurentPoly.parse("1-u^3"), phi6))
    '2'
    >>> str(reduce_mod(LaurentPoly.parse("1-u^2-u^3+u^5"), phi6))
    '4-2u'
    """
    from ..errors import InputError, UnitObstruction, ZeroModulus

    a = LaurentPoly.coerce(a)
    m = LaurentPoly.coerce(m)
    if m.is_zero():
        raise ZeroModulus("reduction modulo the zero polynomial")
    if not m.is_polynomial():
        raise InputError("modulus must be an ordinary polynomial")
    md = m.dense()
    k = clearing_shift(a)
    if not a:
        return LaurentPoly()
    r = dense_divmod(a.shift(k).dense(), md)[1]
    if k:
        m0 = md[0]
        if m0 == 0:
            raise UnitObstruction("u is not invertible modulo a modulus with zero constant term")
        # u * (-(m - m0)/(u m0)) = 1 mod m
        uinv = [_num(-Fraction(c) / m0) for c in md[1:]]
        for _ in range(k):
            r = dense_divmod(dense_mul(r, uinv), md)[1]
    return LaurentPoly.from_dense(r)
