"""Closed-form bound calculator for two asymptotic code families.

Everything here is exact integer/rational arithmetic; no function-field
objects are built.  The first family lives over towers of Artin-Schreier
extensions of F_{q^2}, q = 2^m, with

    n_i = (q^2 - 1) q^{i-1} / 2

conjugate pairs at level i and genus

    g_i = q^i + q^{i-1} - q^{(i+1)/2} - 2 q^{(i-1)/2} + 1          (i odd)
    g_i = q^i + q^{i-1} - q^{i/2+1}/2 - 3 q^{i/2}/2 - q^{i/2-1} + 1 (i even).

Level-i codes with free parameter j give k >= j and
d >= (n_i - g_i - j + 1)/2, and projecting to the binary base field
multiplies the length and dimension by 2m while keeping the distance
bound.  The achievable-rate frontier is

    R_m(delta) = 1 - 2/(2^m - 1) - 4 m delta .

The second family is a high-point-count curve family over F_{p^m} with
m odd:  N = 2 p^m - 1 rational points, p^m - 2 usable conjugate pairs,
and the nominal genus (p^{(m-1)/2}(p+1) - 1)/2 from the degree of its
defining polynomial.  That polynomial has a square factor, so the
nominal genus can be a half-integer; the exact value is reported with a
warning rather than silently rounded.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from .errors import EvenM, JOutOfRange, NonIntegerFormulaWarning, NotPrime
from .galois import _is_prime


@dataclass(frozen=True)
class TowerParams:
    m: int
    i: int
    q: int
    n_i: int
    g_i: int

    @property
    def pairs_to_genus_ratio(self) -> Fraction:
        return Fraction(self.n_i, self.g_i) if self.g_i else Fraction(0)


def tower_params(m: int, i: int) -> TowerParams:
    """Exact pair count and genus at level i of the q = 2^m tower."""
    if m < 2:
        raise JOutOfRange("m must be >= 2")
    if i < 1:
        raise JOutOfRange("level must be >= 1")
    q = 2 ** m
    n_i = (q * q - 1) * q ** (i - 1) // 2
    if i % 2 == 1:
        g_i = q ** i + q ** (i - 1) - q ** ((i + 1) // 2) - 2 * q ** ((i - 1) // 2) + 1
    else:
        g = (
            Fraction(q ** i + q ** (i - 1) + 1)
            - Fraction(q ** (i // 2 + 1), 2)
            - Fraction(3 * q ** (i // 2), 2)
            - Fraction(q ** (i // 2 - 1))
        )
        assert g.denominator == 1
        g_i = int(g)
    return TowerParams(m=m, i=i, q=q, n_i=n_i, g_i=g_i)


@dataclass(frozen=True)
class MatsumotoBounds:
    """Guaranteed parameters of the level-(i, j) code and its binary image."""

    params: TowerParams
    j: int
    k_lower: int
    d_lower_exact: Fraction
    d_lower: int
    binary_n: int
    binary_k_lower: int
    binary_d_lower: int
    delta_estimate: Fraction

    @property
    def delta_valid(self) -> bool:
        return self.delta_estimate >= 0

    def describe_binary(self) -> str:
        return f"[[{self.binary_n},>={self.binary_k_lower},>={self.binary_d_lower}]]"


def matsumoto_bounds(m: int, i: int, j: int) -> MatsumotoBounds:
    """Bounds k >= j, d >= (n_i - g_i - j + 1)/2 and the 2m-fold binary image.

    ``delta_estimate`` is the asymptotic relative-distance estimate at
    rate R = j/n_i; a negative value flags the rate as unattainable in
    the limit even though the finite-length bounds above still hold.
    """
    tp = tower_params(m, i)
    if not 0 <= j <= tp.n_i - tp.g_i:
        raise JOutOfRange(
            f"j must lie in [0, {tp.n_i - tp.g_i}] for level {i}"
        )
    d_exact = Fraction(tp.n_i - tp.g_i - j + 1, 2)
    R = Fraction(j, tp.n_i)
    delta = (1 - R - Fraction(2, 2 ** m - 1)) / (4 * m)
    return MatsumotoBounds(
        params=tp,
        j=j,
        k_lower=j,
        d_lower_exact=d_exact,
        d_lower=ceil(d_exact),
        binary_n=2 * m * tp.n_i,
        binary_k_lower=2 * m * j,
        binary_d_lower=ceil(d_exact),
        delta_estimate=delta,
    )


def rate_bound(m: int, delta: Fraction | int) -> Fraction:
    """R_m(delta) = 1 - 2/(2^m - 1) - 4 m delta, exactly."""
    if m < 2:
        raise JOutOfRange("m must be >= 2")
    d = Fraction(delta)
    if d < 0:
        raise JOutOfRange("delta must be nonnegative")
    return 1 - Fraction(2, 2 ** m - 1) - 4 * m * d


def rate_threshold_delta(m: int) -> Fraction:
    """The delta at which R_m vanishes: delta* = (1 - 2/(2^m-1)) / (4m)."""
    return (1 - Fraction(2, 2 ** m - 1)) / (4 * m)


@dataclass(frozen=True)
class StepanovParams:
    p: int
    m: int
    num_rational: int
    usable_pairs: int
    genus_formula: Fraction

    @property
    def genus_is_integer(self) -> bool:
        return self.genus_formula.denominator == 1

    def rate_distance_bounds(self, R: Fraction) -> tuple[Fraction, Fraction]:
        """Asymptotic bounds k/n >= R and d/n >= 1/2 - R, for R < 1/2."""
        if not 0 <= R < Fraction(1, 2):
            raise JOutOfRange("R must lie in [0, 1/2)")
        return R, Fraction(1, 2) - R


def stepanov_params(p: int, m: int) -> StepanovParams:
    """Point count, pair count, and nominal genus of the many-point family."""
    if not _is_prime(p) or p == 2:
        raise NotPrime(f"{p} must be an odd prime")
    if m < 3 or m % 2 == 0:
        raise EvenM("m must be odd and >= 3")
    n_rat = 2 * p ** m - 1
    pairs = p ** m - 2
    genus = Fraction(p ** ((m - 1) // 2) * (p + 1) - 1, 2)
    if genus.denominator != 1:
        warnings.warn(
            f"nominal genus {genus} is not an integer (the defining polynomial "
            "has even degree and a square factor); reporting the formula value",
            NonIntegerFormulaWarning,
            stacklevel=2,
        )
    return StepanovParams(
        p=p, m=m, num_rational=n_rat, usable_pairs=pairs, genus_formula=genus
    )


def tower_sweep(m: int, i: int, j_values: Optional[list[int]] = None) -> list[MatsumotoBounds]:
    """Bounds for a range of j, for trade-off tables."""
    tp = tower_params(m, i)
    if j_values is None:
        j_values = list(range(0, tp.n_i - tp.g_i + 1))
    return [matsumoto_bounds(m, i, j) for j in j_values]
