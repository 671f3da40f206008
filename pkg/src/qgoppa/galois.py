"""Exact arithmetic in GF(p^m) for odd characteristic.

Elements are stored in a polynomial basis modulo a monic irreducible
modulus of degree m over GF(p).  An element is encoded as the integer
``c0 + c1*p + ... + c_{m-1}*p^{m-1}`` of its coefficient vector, and a
field keeps exp/log tables with respect to a fixed multiplicative
generator, so multiplication, inversion, square testing, and discrete
logarithms are table lookups.

Moduli default to the Conway polynomial for the small fields in the
built-in table below.  That convention pins down the meaning of the
symbol ``w`` (a root of the modulus), so printed ``w``-powers agree
with computer algebra systems that use the same convention.  For pairs
(p, m) outside the table the lexicographically least monic irreducible
is used instead and a warning is emitted: results are then correct up
to field isomorphism but ``w``-power output may differ symbol-for-symbol
from other systems.

Characteristic 2 is rejected by :func:`field_new` because the curve
constructions downstream require odd characteristic.  The classical
coding layer occasionally needs GF(2) (e.g. binary block codes); it
opts in with ``allow_even_characteristic=True``.
"""

from __future__ import annotations

import warnings
from typing import Iterator, Optional, Sequence

from .errors import (
    EvenCharacteristic,
    DegreeMismatch,
    FieldTooLarge,
    NonCanonicalModulusWarning,
    NonResidue,
    NotPrime,
    ReducibleModulus,
    SearchBoundExceeded,
    ZeroInput,
)

#: Largest field size for which exhaustive table construction is attempted.
DISCRETE_LOG_BOUND = 2 ** 20

#: Default search bound for self-dual bases.
SELF_DUAL_SEARCH_BOUND = 3 ** 6

# Conway polynomials, low-degree coefficients first, for the extension
# fields used by the worked constructions.  Each entry is validated on
# construction (irreducibility and that x has full multiplicative order),
# so a corrupt entry fails loudly rather than silently changing results.
_CONWAY = {
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers over GF(p) used only for modulus validation ----------
# (kept separate from the general polynomial module: these validate the
# field construction itself, so they cannot depend on FieldSpec)

def _polymulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce modulo the monic mod
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m + 1):
                res[i - m + j] = (res[i - m + j] - c * mod[j]) % p
    return res[:m] + [0] * (m - len(res)) if len(res) < m else res[:m]


def _polypowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    b = list(base[:m]) + [0] * (m - len(base))
    while e:
        if e & 1:
            result = _polymulmod(result, b, mod, p)
        b = _polymulmod(b, b, mod, p)
        e >>= 1
    return result


def _polygcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while any(b):
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            a, b = b, a
    return a if a else [0]


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degree <= 3 reduces to a root check; in general gcd(f, x^{p^k} - x)
    must be constant for k = 1 .. deg/2.
    """
    m = len(mod) - 1
    if m == 1:
        return True
    # root check (sufficient for degree <= 3, cheap screen otherwise)
    for a in range(p):
        acc = 0
        for c in reversed(mod):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    if m <= 3:
        return True
    x = [0, 1]
    for k in range(1, m // 2 + 1):
        xp = _polypowmod(x, p ** k, mod, p)
        xp = list(xp)
        xp[1] = (xp[1] - 1) % p  # x^{p^k} - x
        g = _polygcd(list(mod), xp, p)
        if len(g) - 1 > 0:
            return False
    return True


def _least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m over GF(p)."""
    for idx in range(p ** m):
        coeffs = []
        t = idx
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {m} over GF({p})")  # pragma: no cover


def _least_primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    return 1  # p == 2


class FieldElement:
    """Element of a fixed GF(p^m), identified by its coefficient encoding."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "FieldSpec", idx: int):
        self.field = field
        self.idx = idx

    # -- structure ------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Polynomial-basis coordinates, constant term first."""
        p, m = self.field.p, self.field.m
        t, out = self.idx, []
        for _ in range(m):
            out.append(t % p)
            t //= p
        return tuple(out)

    def is_zero(self) -> bool:
        return self.idx == 0

    def in_prime_subfield(self) -> bool:
        return self.idx < self.field.p

    def as_int(self) -> int:
        """Integer value, defined only for prime-subfield elements."""
        if not self.in_prime_subfield():
            raise ValueError(f"{self!r} is not in the prime subfield")
        return self.idx

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field._add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field._add(self, -other)

    def __neg__(self) -> "FieldElement":
        return self.field._neg(self)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field._mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field._mul(self, other.inverse())

    def inverse(self) -> "FieldElement":
        if self.idx == 0:
            raise ZeroInput("zero has no inverse")
        f = self.field
        return f._exp[(-f._log[self.idx]) % (f.q - 1)]

    def __pow__(self, e: int) -> "FieldElement":
        f = self.field
        if self.idx == 0:
            if e < 0:
                raise ZeroInput("zero has no inverse")
            return f.one if e == 0 else f.zero
        return f._exp[(f._log[self.idx] * e) % (f.q - 1)]

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.idx == other.idx
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.idx))

    def __repr__(self) -> str:
        return f"FieldElement({self}, GF({self.field.q}))"

    def __str__(self) -> str:
        f = self.field
        if f.m == 1:
            return str(self.idx)
        if self.idx == 0:
            return "0"
        k = f._log[self.idx]
        if k == 0:
            return "1"
        return "w" if k == 1 else f"w^{k}"


class FieldSpec:
    """A concrete GF(p^m): modulus, generator, and lookup tables.

    Not constructed directly; use :func:`field_new`.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], generator_idx: Optional[int] = None):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        if self.q > DISCRETE_LOG_BOUND:
            raise FieldTooLarge(
                f"GF({p}^{m}) exceeds the table bound {DISCRETE_LOG_BOUND}"
            )

        # reduction of w^m expressed in the basis 1, w, .., w^{m-1}
        self._wm_reduction = tuple((-modulus[j]) % p for j in range(m))

        self._elements = [FieldElement(self, i) for i in range(self.q)]
        self.zero = self._elements[0]
        self.one = self._elements[1]

        gen_idx = generator_idx if generator_idx is not None else self._default_generator_idx()
        self._build_tables(gen_idx)
        self.generator = self._elements[gen_idx]
        self._verify_generator_order()
        self._prime_subfield: Optional[FieldSpec] = None

    # -- construction helpers -------------------------------------------

    def _default_generator_idx(self) -> int:
        if self.m == 1:
            return _least_primitive_root(self.p) % self.p
        return self.p  # the class of x, i.e. w

    def _mul_idx(self, a: int, b: int) -> int:
        """Coefficient-level product, used only to build the tables."""
        p, m = self.p, self.m
        ac = [(a // p ** i) % p for i in range(m)]
        bc = [(b // p ** i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(m):
                    prod[k - m + j] = (prod[k - m + j] + c * self._wm_reduction[j]) % p
        return sum(prod[i] * p ** i for i in range(m))

    def _build_tables(self, gen_idx: int) -> None:
        q = self.q
        self._exp: list[FieldElement] = []
        self._log: list[int] = [-1] * q
        acc = 1
        for k in range(q - 1):
            if self._log[acc] != -1:
                raise ReducibleModulus(
                    "generator does not have full multiplicative order"
                )
            self._exp.append(self._elements[acc])
            self._log[acc] = k
            acc = self._mul_idx(acc, gen_idx)
        if acc != 1:
            raise ReducibleModulus("generator does not have full multiplicative order")

    def _verify_generator_order(self) -> None:
        # table construction already walked q-1 distinct powers; double-check
        # against proper divisors for small factor counts.
        for f in _prime_factors(self.q - 1):
            if (self.generator ** ((self.q - 1) // f)) == self.one:
                raise ReducibleModulus("generator order divides a proper factor")

    # -- element construction -------------------------------------------

    def element(self, coeffs: Sequence[int] | int) -> FieldElement:
        """Element from an integer (prime subfield value) or coefficient list."""
        if isinstance(coeffs, int):
            return self._elements[coeffs % self.p]
        if len(coeffs) > self.m:
            raise DegreeMismatch(f"expected at most {self.m} coordinates")
        idx = 0
        for i, c in enumerate(coeffs):
            idx += (c % self.p) * self.p ** i
        return self._elements[idx]

    def from_index(self, idx: int) -> FieldElement:
        return self._elements[idx]

    def elements(self) -> Iterator[FieldElement]:
        return iter(self._elements)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return iter(self._elements[1:])

    def prime_subfield(self) -> "FieldSpec":
        if self.m == 1:
            return self
        if self._prime_subfield is None:
            self._prime_subfield = field_new(self.p, 1)
        return self._prime_subfield

    # -- arithmetic kernels ----------------------------------------------

    def _add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.m == 1:
            return self._elements[(a.idx + b.idx) % self.p]
        p = self.p
        idx, mult = 0, 1
        ai, bi = a.idx, b.idx
        for _ in range(self.m):
            idx += ((ai + bi) % p) * mult
            ai //= p
            bi //= p
            mult *= p
        return self._elements[idx]

    def _neg(self, a: FieldElement) -> FieldElement:
        if self.m == 1:
            return self._elements[(-a.idx) % self.p]
        p = self.p
        idx, mult = 0, 1
        ai = a.idx
        for _ in range(self.m):
            idx += ((-ai) % p) * mult
            ai //= p
            mult *= p
        return self._elements[idx]

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if a.idx == 0 or b.idx == 0:
            return self.zero
        return self._exp[(self._log[a.idx] + self._log[b.idx]) % (self.q - 1)]

    # -- canonical orderings ----------------------------------------------

    def enumeration_key(self, x: FieldElement) -> int:
        """Position of x in the canonical enumeration 0, w, w^2, ..., w^{q-1}.

        Zero comes first and 1 (= w^{q-1}) last; this is the order in which
        rational points are listed by the curve layer.
        """
        if x.idx == 0:
            return 0
        k = self._log[x.idx]
        return self.q - 1 if k == 0 else k

    # -- misc --------------------------------------------------------------

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))


def field_new(
    p: int,
    m: int = 1,
    modulus: Optional[Sequence[int]] = None,
    *,
    allow_even_characteristic: bool = False,
) -> FieldSpec:
    """Construct GF(p^m) for an odd prime p.

    When ``modulus`` is omitted, the Conway polynomial is used for (p, m)
    in the built-in table; otherwise the lexicographically least monic
    irreducible is searched and a :class:`NonCanonicalModulusWarning` is
    emitted.  An explicit modulus must be monic of degree m and irreducible.

    GF(2^k) is rejected unless ``allow_even_characteristic`` is set; the
    classical block-code layer is the only intended user of that flag.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2 and not allow_even_characteristic:
        raise EvenCharacteristic(
            "characteristic 2 is not supported by the curve constructions"
        )
    if m < 1:
        raise DegreeMismatch("extension degree must be >= 1")

    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1:
            raise DegreeMismatch(f"modulus must have degree {m}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not _is_irreducible(mod, p):
            raise ReducibleModulus("modulus is reducible")
        return _spec_with_some_generator(p, m, mod)

    if m == 1:
        g = _least_primitive_root(p)
        # degree-1 "modulus" x - g, so that w = g is the canonical generator
        return FieldSpec(p, 1, ((-g) % p, 1), generator_idx=g % p)

    if (p, m) in _CONWAY:
        return FieldSpec(p, m, _CONWAY[(p, m)])

    warnings.warn(
        f"no canonical modulus on file for GF({p}^{m}); using the least "
        "irreducible (results agree with other systems only up to isomorphism)",
        NonCanonicalModulusWarning,
        stacklevel=2,
    )
    return _spec_with_some_generator(p, m, _least_irreducible(p, m))


def _spec_with_some_generator(p: int, m: int, mod: tuple[int, ...]) -> FieldSpec:
    """Build a FieldSpec over the given modulus, preferring w = x as the
    generator and falling back to the least primitive element otherwise."""
    if m == 1:
        root = (-mod[0]) % p
        order_ok = p == 2 or all(
            pow(root, (p - 1) // f, p) != 1 for f in _prime_factors(p - 1)
        )
        gen = root if (root > 1 or p == 2) and order_ok else _least_primitive_root(p)
        return FieldSpec(p, 1, mod, generator_idx=gen)
    # prime-subfield elements have order dividing p-1, so only idx >= p can
    # generate the full multiplicative group of a proper extension
    for gen_idx in range(p, p ** m):
        try:
            return FieldSpec(p, m, mod, generator_idx=gen_idx)
        except ReducibleModulus:
            continue
    raise ReducibleModulus("no generator found")  # pragma: no cover


def trace(x: FieldElement) -> FieldElement:
    """Trace onto the prime field: sum of x^{p^v} for v = 0 .. m-1.

    The result is returned as an element of GF(p).
    """
    f = x.field
    if f.m == 1:
        return x
    acc = x
    term = x
    for _ in range(f.m - 1):
        term = term ** f.p
        acc = acc + term
    base = f.prime_subfield()
    return base.element(acc.idx if acc.idx < f.p else _nonsubfield_guard(acc))


def _nonsubfield_guard(x: FieldElement) -> int:  # pragma: no cover
    raise AssertionError(f"trace landed outside the prime subfield: {x!r}")


def is_square(x: FieldElement) -> bool:
    """Whether x is a nonzero quadratic residue (Euler criterion)."""
    if x.is_zero():
        raise ZeroInput("is_square is undefined at 0")
    f = x.field
    if f.p == 2:
        return True  # squaring is a bijection in characteristic 2
    return f._log[x.idx] % 2 == 0


def sqrt(x: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Both square roots of x, ordered lexicographically by coefficients.

    Returns (0, 0) for x = 0 and raises :class:`NonResidue` for a
    non-square input.
    """
    f = x.field
    if x.is_zero():
        return (f.zero, f.zero)
    if f.p == 2:
        r = x ** (f.q // 2)  # x^{2^{m-1}} squares to x
        return (r, r)
    k = f._log[x.idx]
    if k % 2 != 0:
        raise NonResidue(f"{x} is not a square in {f!r}")
    r = f._exp[k // 2]
    pair = sorted((r, -r), key=lambda e: e.coeffs)
    return (pair[0], pair[1])


def discrete_log(x: FieldElement) -> int:
    """Least r >= 0 with generator^r = x (table lookup; field size bounded)."""
    if x.is_zero():
        raise ZeroInput("discrete log of zero")
    return x.field._log[x.idx]


def self_dual_basis(
    spec: FieldSpec, bound: int = SELF_DUAL_SEARCH_BOUND
) -> Optional[tuple[FieldElement, ...]]:
    """A basis a_1..a_m of GF(p^m)/GF(p) with trace(a_i a_j) = delta_ij.

    Found by depth-first search with orthonormality pruning; returns None
    when no self-dual basis exists (for odd p that is exactly the case of
    even m).  Elements orthonormal under the nondegenerate trace form are
    automatically linearly independent, so no rank check is needed.
    """
    if spec.q > bound:
        raise SearchBoundExceeded(
            f"field size {spec.q} exceeds the search bound {bound}"
        )
    one = spec.prime_subfield().one
    zero = spec.prime_subfield().zero
    if spec.m == 1:
        return (spec.one,)

    unit_norm = [x for x in spec.nonzero_elements() if trace(x * x) == one]

    def extend(chosen: list[FieldElement], start_key: int) -> Optional[list[FieldElement]]:
        if len(chosen) == spec.m:
            return chosen
        for cand in unit_norm:
            if spec.enumeration_key(cand) <= start_key:
                continue
            if all(trace(cand * c) == zero for c in chosen):
                found = extend(chosen + [cand], spec.enumeration_key(cand))
                if found is not None:
                    return found
        return None

    # basis sets are unordered; restricting to increasing enumeration keys
    # only removes permutations of the same set
    found = extend([], 0)
    return tuple(found) if found is not None else None
