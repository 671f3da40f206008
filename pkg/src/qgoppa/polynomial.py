"""Univariate polynomial algebra over a FieldSpec.

Dense representation, low-degree coefficients first; every polynomial in
the constructions here has degree at most ~10, so no sparse or FFT
machinery is warranted.  Root finding is exhaustive over the (small)
field.  The zero polynomial has degree -1 by convention.
"""

from __future__ import annotations

import ast
from typing import Iterable

from .errors import BothZero, FieldTooLarge, NotSquareFree, ZeroInput
from .galois import DISCRETE_LOG_BOUND, FieldElement, FieldSpec


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[FieldElement]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_ints(cls, field: FieldSpec, ints: Iterable[int]) -> "Poly":
        return cls(field, [field.element(c) for c in ints])

    @classmethod
    def constant(cls, field: FieldSpec, c: FieldElement) -> "Poly":
        return cls(field, [c])

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, [field.one])

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable[FieldElement]) -> "Poly":
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [-r, field.one])
        return out

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> FieldElement:
        if self.is_zero():
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(f, out)

    def scale(self, c: FieldElement) -> "Poly":
        return Poly(self.field, [a * c for a in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroInput("division by the zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(f), self
        quo = [f.zero] * (dq + 1)
        inv = other.leading().inverse()
        for k in range(dq, -1, -1):
            if len(rem) - 1 < k + other.degree:
                continue
            c = rem[k + other.degree] * inv
            if c.is_zero():
                continue
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        while rem and rem[-1].is_zero():
            rem.pop()
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * f.element(i % f.p))
        return Poly(f, out)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, alpha: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * alpha + c
        return acc

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.field!r})"


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_square_free(f: Poly) -> bool:
    """True iff gcd(f, f') is constant.

    A vanishing derivative (possible in characteristic p) means f is a
    p-th power of a lower-degree polynomial, which is never square-free.
    """
    if f.degree < 1:
        raise ZeroInput("square-free test needs degree >= 1")
    d = f.derivative()
    if d.is_zero():
        return False
    return gcd(f, d).is_constant()


def roots(f: Poly, bound: int = DISCRETE_LOG_BOUND) -> list[FieldElement]:
    """All roots of f in its coefficient field, by exhaustive evaluation.

    Returned in the field's canonical enumeration order.
    """
    if f.degree < 1:
        raise ZeroInput("root finding needs degree >= 1")
    field = f.field
    if field.q > bound:
        raise FieldTooLarge(f"field size {field.q} exceeds the scan bound")
    found = [a for a in field.elements() if f(a).is_zero()]
    return sorted(found, key=field.enumeration_key)


def square_part(f: Poly) -> tuple[Poly, Poly]:
    """Decompose f = u^2 * s with s square-free, both monic up to f's leading
    coefficient (the leading coefficient stays on s).

    Repeated factors are extracted at the rational roots of f; if the
    rootless cofactor still fails the square-free test (a repeated
    irreducible factor of degree >= 2), the decomposition is refused.
    """
    field = f.field
    u = Poly.one(field)
    s = Poly.one(field)
    rest = f
    for a in roots(f):
        mult = 0
        lin = Poly(field, [-a, field.one])
        while True:
            q, r = divmod(rest, lin)
            if not r.is_zero():
                break
            rest = q
            mult += 1
        u = u * lin ** (mult // 2)
        if mult % 2:
            s = s * lin
    if rest.degree >= 1 and not is_square_free(rest):
        raise NotSquareFree(
            "repeated factor without rational roots; cannot extract the square part"
        )
    return u, s * rest


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse a polynomial literal such as ``(x-1)*(x-2)`` or ``x^5-2*x^3+x^2+1``.

    ``^`` is accepted for exponentiation, integer constants reduce into the
    prime subfield, and ``w`` denotes the field generator.  A bare bracket
    list ``[c0, c1, ...]`` is read as low-degree-first coefficients.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        ints = ast.literal_eval(stripped)
        return Poly.from_ints(field, [int(c) for c in ints])

    tree = ast.parse(stripped.replace("^", "**"), mode="eval")

    def ev(node: ast.AST) -> Poly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = ev(node.left)
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return base ** node.right.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            raise ValueError(f"unsupported operator {ast.dump(node.op)}")
        if isinstance(node, ast.UnaryOp):
            val = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -val
            if isinstance(node.op, ast.UAdd):
                return val
            raise ValueError("unsupported unary operator")
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int):
                return Poly.constant(field, field.element(node.value))
            raise ValueError("only integer constants are allowed")
        if isinstance(node, ast.Name):
            if node.id == "x":
                return Poly.x(field)
            if node.id == "w":
                return Poly.constant(field, field.generator)
            raise ValueError(f"unknown symbol {node.id!r}")
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")

    return ev(tree)


def poly_from_spec(field: FieldSpec, spec: "str | Iterable[int] | Poly") -> Poly:
    """Coerce a CLI/config polynomial specification into a Poly."""
    if isinstance(spec, Poly):
        return spec
    if isinstance(spec, str):
        return parse_poly(field, spec)
    return Poly.from_ints(field, list(spec))
