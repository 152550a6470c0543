"""Dense univariate polynomials over an exact scalar field."""

from __future__ import annotations

from math import comb

from .scalars import QQ, common_field, field_of, scalar_from_json, scalar_to_json, field_from_json


class Poly:
    """Polynomial ``sum(coeffs[j] * x**j)``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field=None):
        if field is None:
            field = common_field(coeffs)
        coeffs = [field(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field

    @classmethod
    def monomial(cls, k: int, c=1, field=QQ) -> "Poly":
        return cls([0] * k + [c], field)

    @classmethod
    def x(cls, field=QQ) -> "Poly":
        return cls([0, 1], field)

    @classmethod
    def linear_power(cls, root, k: int, field=None) -> "Poly":
        """``(x - root)**k``."""
        field = field or field_of(root)
        root = field(root)
        out = [0] * (k + 1)
        for i in range(k + 1):
            out[i] = comb(k, i) * (-root) ** (k - i)
        return cls(out, field)

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j: int):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.field.zero

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                field = common_field([self.field.one, other.field.one])
                return Poly(other.coeffs, field)
            return other
        return Poly([other], self.field)

    def _field_with(self, other: "Poly"):
        if other.field == self.field:
            return self.field
        return common_field([self.field.one, other.field.one])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self), len(other))
        return Poly([self[j] + other[j] for j in range(n)], self._field_with(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        field = self._field_with(other)
        if not self or not other:
            return Poly((), field)
        out = [field.zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1], self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, j: int = 1) -> "Poly":
        if j < 0:
            raise ValueError("derivative order must be nonnegative")
        out = []
        for k in range(j, len(self.coeffs)):
            f = 1
            for i in range(k - j + 1, k + 1):
                f *= i
            out.append(self.coeffs[k] * f)
        return Poly(out, self.field)

    def taylor_shift(self, c) -> "Poly":
        """``q`` with ``q(x) = p(x + c)``, by repeated synthetic division."""
        c = self.field(c)
        a = list(self.coeffs)
        n = len(a)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                a[k] = a[k] + c * a[k + 1]
        return Poly(a, self.field)

    def taylor_coefficients(self, c) -> tuple:
        """Coefficients of ``p`` in powers of ``(x - c)``, padded to ``len(p)``."""
        q = self.taylor_shift(c)
        return tuple(q[j] for j in range(len(self)))

    def scale_argument(self, s) -> "Poly":
        """``p(s*x)``."""
        s = self.field(s)
        out, power = [], self.field.one
        for a in self.coeffs:
            out.append(a * power)
            power = power * s
        return Poly(out, self.field)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            cs = str(c)
            if mono and cs == "1":
                cs = ""
            elif mono and cs == "-1":
                cs = "-"
            elif mono and any(ch in cs for ch in "+- /") and not cs.lstrip("-").replace("/", "").isdigit():
                cs = f"({cs})*"
            elif mono:
                cs += "*"
            terms.append(cs + mono)
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj, field=None) -> "Poly":
        if set(obj) != {"coeffs"}:
            raise ValueError(f"bad polynomial literal {obj!r}")
        lits = obj["coeffs"]
        field = field or field_from_json(lits)
        return cls([scalar_from_json(c, field) for c in lits], field)


def derivative(p: Poly, j: int) -> Poly:
    return p.derivative(j)


def taylor_shift(p: Poly, c) -> Poly:
    return p.taylor_shift(c)


def crt_interpolate(residues, field=None) -> Poly:
    """Unique polynomial of degree < sum(powers) with ``P = r mod (x - root)**power``.

    ``residues`` is a sequence of ``(root, power, residue_poly)``.  The
    congruences are turned into the square linear system on Taylor
    coefficients and solved exactly.
    """
    from .linalg import ExactMatrix, solve

    residues = list(residues)
    if field is None:
        field = common_field([r for r, _, _ in residues] + [c for _, _, p in residues for c in p.coeffs])
    roots = [field(r) for r, _, _ in residues]
    for i in range(len(roots)):
        for j in range(i):
            if roots[i] == roots[j]:
                raise ValueError(f"duplicate CRT modulus root {roots[i]}")
    size = sum(k for _, k, _ in residues)
    rows, rhs = [], []
    for root, (_, power, res) in zip(roots, residues):
        res = Poly(res.coeffs, field)
        if res.degree >= power:
            raise ValueError(f"residue {res} has degree >= {power}")
        taylor = res.taylor_shift(root)
        for j in range(power):
            rows.append([comb(k, j) * root ** (k - j) if k >= j else field.zero for k in range(size)])
            rhs.append(taylor[j])
    if size == 0:
        return Poly((), field)
    sol = solve(ExactMatrix(rows, field), rhs)
    return Poly(sol, field)
