"""Exact scalar fields.

Three kinds of field are supported:

* ``QQ`` -- the rationals, elements are :class:`fractions.Fraction`;
* ``QuadraticField(d)`` -- Q(sqrt d) for a square-free ``d``, elements are
  :class:`QuadraticNumber`;
* ``GenericField(k)`` -- the rational function field Q(t1, ..., tk), elements
  are :class:`GenericNumber`.  Indeterminates stand in for generic or
  transcendental nodes (pi is just another indeterminate).

Besides element arithmetic, every field exposes a small "ring kernel" used by
the fraction-free linear algebra: rows are scaled into an integral ring
(``ring_row``), combined with ``*`` and ``-`` only, and brought back to a
canonical representative of their projective class with ``primitive``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracField
from sympy.polys.rings import PolyRing


class FieldMismatchError(ValueError):
    """Operands live in incompatible fields."""


class SignUndefinedError(ValueError):
    """The field has no distinguished real embedding."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational number")


def _lcm_denominators(values) -> int:
    return reduce(math.lcm, (v.denominator for v in values), 1)


def _square_free(d: int) -> bool:
    d = abs(d)
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------------------
# Rationals


class RationalField:
    kind = "rational"

    def __call__(self, value) -> Fraction:
        if isinstance(value, (QuadraticNumber, GenericNumber)):
            raise FieldMismatchError(f"{value!r} is not rational")
        return _frac(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def sign(self, x) -> int:
        x = self(x)
        return (x > 0) - (x < 0)

    def to_json(self, x) -> dict:
        return {"q": str(self(x))}

    # ring kernel: integers
    def ring_row(self, row):
        row = [self(v) for v in row]
        scale = _lcm_denominators(row)
        return [int(v * scale) for v in row]

    def primitive(self, vec) -> tuple:
        g = math.gcd(*vec)
        if g == 0:
            return tuple(vec)
        lead = next(v for v in vec if v)
        if lead < 0:
            g = -g
        return tuple(v // g for v in vec)

    def exquo(self, a, b):
        return a // b

    def key(self, vec) -> tuple:
        return tuple(vec)

    def from_ring(self, a) -> Fraction:
        return Fraction(a)


QQ = RationalField()


# ---------------------------------------------------------------------------
# Quadratic fields


class QuadraticField:
    kind = "quadratic"
    __slots__ = ("d",)

    def __init__(self, d: int):
        d = int(d)
        if d in (0, 1) or not _square_free(d):
            raise ValueError(f"d={d} must be square-free and not 0 or 1")
        self.d = d

    def __eq__(self, other):
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self):
        return hash(("quad", self.d))

    def __repr__(self):
        return f"QuadraticField({self.d})"

    def __call__(self, value, b=0) -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} not in {self!r}")
            return value
        if isinstance(value, GenericNumber):
            raise FieldMismatchError(f"{value!r} not in {self!r}")
        return QuadraticNumber(_frac(value), _frac(b), self)

    @property
    def zero(self):
        return QuadraticNumber(Fraction(0), Fraction(0), self)

    @property
    def one(self):
        return QuadraticNumber(Fraction(1), Fraction(0), self)

    @property
    def sqrt(self):
        return QuadraticNumber(Fraction(0), Fraction(1), self)

    def sign(self, x) -> int:
        return self(x).sign()

    def to_json(self, x) -> dict:
        x = self(x)
        return {"quad": {"a": str(x.a), "b": str(x.b), "d": self.d}}

    # ring kernel: the field itself; vectors normalised to a leading 1
    def ring_row(self, row):
        return [self(v) for v in row]

    def primitive(self, vec) -> tuple:
        lead = next((v for v in vec if v), None)
        if lead is None or lead == 1:
            return tuple(vec)
        inv = 1 / lead
        return tuple(v * inv for v in vec)

    def exquo(self, a, b):
        return a / b

    def key(self, vec) -> tuple:
        return tuple(vec)

    def from_ring(self, a):
        return a


class QuadraticNumber:
    """``a + b*sqrt(d)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: Fraction, b: Fraction, field: QuadraticField):
        self.a = a
        self.b = b
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.field.d != self.field.d:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.field)
        if isinstance(other, GenericNumber):
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.field)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadraticNumber(self.a * other, self.b * other, self.field)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, e = self.a, self.b, o.a, o.b
        return QuadraticNumber(a * c + self.field.d * b * e, a * e + b * c, self.field)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.field.d * self.b * self.b

    def conjugate(self):
        return QuadraticNumber(self.a, -self.b, self.field)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in " + repr(self.field))
        return QuadraticNumber(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("division by zero in " + repr(self.field))
            return QuadraticNumber(self.a / o.a, self.b / o.a, self.field)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self.field.d == other.field.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def sign(self) -> int:
        """Sign under the embedding sending sqrt(d) to the positive root."""
        if self.field.d < 0:
            raise SignUndefinedError(f"no real embedding of {self.field!r}")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with d b^2
        lhs, rhs = self.a * self.a, self.field.d * self.b * self.b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, d={self.field.d})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = f"sqrt({self.field.d})"
        b = "" if self.b == 1 else "-" if self.b == -1 else f"{self.b}*"
        if not self.a:
            return f"{b}{root}"
        sep = "+" if self.b > 0 else "-"
        bb = abs(self.b)
        coeff = "" if bb == 1 else f"{bb}*"
        return f"{self.a} {sep} {coeff}{root}"


# ---------------------------------------------------------------------------
# Rational functions in indeterminates


@lru_cache(maxsize=None)
def _generic_domains(k: int):
    names = [f"t{i}" for i in range(1, k + 1)]
    ring = PolyRing(names, ZZ)
    frac = FracField(names, ZZ)
    return ring, frac


class GenericField:
    """Q(t1, ..., tk); elements are canonical fractions of integer polynomials."""

    kind = "generic"
    __slots__ = ("k", "ring", "frac")

    def __init__(self, k: int):
        k = int(k)
        if k < 1:
            raise ValueError("a generic field needs at least one indeterminate")
        self.k = k
        self.ring, self.frac = _generic_domains(k)

    def __eq__(self, other):
        return isinstance(other, GenericField) and other.k == self.k

    def __hash__(self):
        return hash(("gen", self.k))

    def __repr__(self):
        return f"GenericField({self.k})"

    def __call__(self, value) -> "GenericNumber":
        if isinstance(value, GenericNumber):
            if value.field.k == self.k:
                return value
            if value.field.k < self.k:
                return self.parse(str(value))
            raise FieldMismatchError(f"{value!r} not in {self!r}")
        if isinstance(value, QuadraticNumber):
            raise FieldMismatchError(f"{value!r} not in {self!r}")
        if isinstance(value, str):
            return self.parse(value)
        q = _frac(value)
        return GenericNumber(self.frac(q.numerator) / q.denominator, self)

    def gen(self, i: int) -> "GenericNumber":
        """The indeterminate ``t_i`` (1-based)."""
        return GenericNumber(self.frac.gens[i - 1], self)

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(1, self.k + 1))

    @property
    def zero(self):
        return GenericNumber(self.frac.zero, self)

    @property
    def one(self):
        return GenericNumber(self.frac.one, self)

    def parse(self, text: str) -> "GenericNumber":
        names = {int(s) for s in re.findall(r"t(\d+)", text)}
        if names and (min(names) < 1 or max(names) > self.k):
            raise FieldMismatchError(f"{text!r} uses indeterminates outside {self!r}")
        expr = sympy.sympify(text.replace("^", "**"), locals={f"t{i}": sympy.Symbol(f"t{i}") for i in range(1, self.k + 1)})
        return GenericNumber(self.frac.from_expr(expr), self)

    def sign(self, x) -> int:
        raise SignUndefinedError("sign is undefined for generic scalars")

    def to_json(self, x) -> dict:
        return {"gen": str(self(x))}

    # ring kernel: integer polynomials, primitive with positive leading coefficient
    def ring_row(self, row):
        row = [self(v).value for v in row]
        scale = self.ring.one
        for v in row:
            d = v.denom
            if d != 1:
                scale = scale * d.exquo(scale.gcd(d))
        return [v.numer * scale.exquo(v.denom) for v in row]

    def primitive(self, vec) -> tuple:
        nz = [v for v in vec if v]
        if not nz:
            return tuple(vec)
        if any(v.is_ground for v in nz):
            g = math.gcd(*(int(v.content()) for v in nz))
            g = self.ring(g)
        else:
            g = nz[0]
            for v in nz[1:]:
                g = g.gcd(v)
                if g.is_ground:
                    g = self.ring(math.gcd(*(int(w.content()) for w in nz)))
                    break
        if (g.LC < 0) != (nz[0].LC < 0):
            g = -g
        if g == 1:
            return tuple(vec)
        return tuple(v.exquo(g) if v else v for v in vec)

    def exquo(self, a, b):
        return a.exquo(b)

    def key(self, vec) -> tuple:
        # PolyElement caches a hash that goes stale; key on the terms instead
        return tuple(frozenset(v.items()) for v in vec)

    def from_ring(self, a) -> "GenericNumber":
        return GenericNumber(self.frac(a), self)


class GenericNumber:
    __slots__ = ("value", "field")

    def __init__(self, value, field: GenericField):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if isinstance(other, GenericNumber):
            if other.field.k != self.field.k:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.frac(other)
        if isinstance(other, Fraction):
            return self.field.frac(other.numerator) / other.denominator
        if isinstance(other, QuadraticNumber):
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return NotImplemented

    def _wrap(self, v):
        return GenericNumber(v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("division by zero in " + repr(self.field))
        return self._wrap(self.value / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.value:
            raise ZeroDivisionError("division by zero in " + repr(self.field))
        return self._wrap(o / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, k: int):
        if k == 0:
            return self.field.one
        if k < 0 and not self.value:
            raise ZeroDivisionError("division by zero in " + repr(self.field))
        return self._wrap(self.value**k)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, GenericNumber):
            return self.field.k == other.field.k and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        v = self.value
        if v.numer.is_ground and v.denom.is_ground:
            return hash(Fraction(int(v.numer.LC), int(v.denom.LC)))
        # PolyElement caches its own hash even while mutable; hash the terms
        return hash((frozenset(v.numer.items()), frozenset(v.denom.items())))

    @property
    def numerator(self):
        return self.value.numer

    @property
    def denominator(self):
        return self.value.denom

    def sign(self):
        raise SignUndefinedError("sign is undefined for generic scalars")

    def __repr__(self):
        return f"GenericNumber({self.value}, k={self.field.k})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# helpers


def field_of(x):
    if isinstance(x, (QuadraticNumber, GenericNumber)):
        return x.field
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"{x!r} is not a scalar")


def common_field(values, default=QQ):
    """The single field all ``values`` live in (rationals embed anywhere)."""
    found = None
    for v in values:
        f = field_of(v)
        if f == QQ:
            continue
        if found is None:
            found = f
        elif f != found:
            if isinstance(f, GenericField) and isinstance(found, GenericField):
                found = f if f.k > found.k else found
                continue
            raise FieldMismatchError(f"{found!r} vs {f!r}")
    return found if found is not None else default


def sign(x) -> int:
    """Exact sign of a real-embeddable scalar."""
    return field_of(x).sign(x)


def is_zero(x) -> bool:
    return not x


def scalar_to_json(x) -> dict:
    return field_of(x).to_json(x)


def scalar_from_json(obj, field=None):
    """Inverse of :func:`scalar_to_json`; ``field`` pins the target field."""
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"bad scalar literal {obj!r}")
    (tag, body), = obj.items()
    if tag == "q":
        value = Fraction(body)
        return value if field is None else field(value)
    if tag == "quad":
        if set(body) != {"a", "b", "d"}:
            raise ValueError(f"bad quadratic literal {obj!r}")
        f = QuadraticField(body["d"])
        if field is not None and field != f:
            raise FieldMismatchError(f"{f!r} vs {field!r}")
        return f(Fraction(body["a"]), Fraction(body["b"]))
    if tag == "gen":
        if field is None:
            names = [int(s) for s in re.findall(r"t(\d+)", body)]
            field = GenericField(max(names, default=1))
        if not isinstance(field, GenericField):
            raise FieldMismatchError(f"generic literal in {field!r}")
        return field.parse(body)
    raise ValueError(f"unknown scalar tag {tag!r}")


def field_from_json(literals):
    """Smallest field holding every literal of a JSON list."""
    gen = [int(s) for lit in literals if "gen" in lit for s in re.findall(r"t(\d+)", lit["gen"])]
    quads = {lit["quad"]["d"] for lit in literals if "quad" in lit}
    if gen and quads:
        raise FieldMismatchError("cannot mix generic and quadratic literals")
    if len(quads) > 1:
        raise FieldMismatchError(f"several quadratic fields: {sorted(quads)}")
    if any("gen" in lit for lit in literals):
        return GenericField(max(gen, default=1))
    if quads:
        return QuadraticField(quads.pop())
    return QQ
