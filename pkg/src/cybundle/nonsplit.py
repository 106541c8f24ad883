"""Euler-characteristic non-splitness criteria for extension bundles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .surfaces import BaseSurface, DivisorClass


@dataclass(frozen=True)
class ChiCoefficients:
    """Coefficients of ch(R^1 pi_* O(-y sigma)) and the chi formulas, y = m*x."""

    y: int
    A1: Fraction
    A2: Fraction
    A3: Fraction
    A4: Fraction


def chi_coefficients(y: int) -> ChiCoefficients:
    return ChiCoefficients(
        y=y,
        A1=Fraction(-1) + Fraction(y * (y - 1), 2),
        A2=Fraction(1) + Fraction(y * (y - 1) * (2 * y - 1), 6),
        A3=Fraction(y * (y * y - 1), 3),
        A4=Fraction(-1) + Fraction(y * y, 2),
    )


@dataclass(frozen=True)
class ChiResult:
    case: str  # "xpos" | "xneg" | "xzero"
    chi: Fraction
    integral: bool


def chi_nonsplit(
    s: BaseSurface, n: int, x: int, alpha: DivisorClass, c2e: int
) -> ChiResult:
    """chi of the sheaf controlling non-splitness, dispatched on sign(x).

    m = n+1 is the extension rank; x > 0 gives chi(B, E_1), x < 0 gives
    chi(B, E_2), x = 0 gives chi(B, E tensor O(-m alpha)).
    """
    m = n + 1
    a_sq = s.square(alpha)
    a_c1 = s.intersect(alpha, s.c1)
    if x == 0:
        chi = n - c2e + Fraction(n * m, 2) * (m * a_sq - a_c1)
        case = "xzero"
    else:
        y = m * x
        co = chi_coefficients(y)
        body = y * (n - c2e + Fraction(n * m * m, 2) * a_sq)
        body += co.A3 * Fraction(n, 2) * s.c1_sq - co.A4 * n * m * a_c1
        if x > 0:
            chi, case = body, "xpos"
        else:
            chi, case = -body, "xneg"
    return ChiResult(case=case, chi=chi, integral=chi.denominator == 1)


@dataclass(frozen=True)
class NonsplitVerdict:
    passed: bool
    clause: str
    value: Fraction


def nonsplit_feasible(
    s: BaseSurface,
    n: int,
    x: int,
    alpha: DivisorClass,
    c2e: int,
    h: DivisorClass,
    z,
) -> NonsplitVerdict:
    """Sufficient condition for choosing the extension non-split.

    x > 0: (2H - z c1).alpha <= 0 and chi(B,E_1) > 0;
    x < 0: chi(B,E_2) < 0;  x = 0: chi(B, E(-m alpha)) < 0.
    """
    z = Fraction(z)
    res = chi_nonsplit(s, n, x, alpha, c2e)
    if x > 0:
        slope = 2 * s.intersect(h, alpha) - z * s.intersect(s.c1, alpha)
        if slope > 0:
            return NonsplitVerdict(False, "(2H-zc1).alpha<=0", slope)
        return NonsplitVerdict(res.chi > 0, "chi_E1>0", res.chi)
    if x < 0:
        return NonsplitVerdict(res.chi < 0, "chi_E2<0", res.chi)
    return NonsplitVerdict(res.chi < 0, "chi_x0<0", res.chi)


def necessary_mu_condition(
    s: BaseSurface,
    n: int,
    m: int,
    x: int,
    alpha: DivisorClass,
    h: DivisorClass,
    z,
) -> bool:
    """Necessary slope condition for x > 0:
    (y-1)(2H - z c1).c1 - m (2H - z c1).alpha > 0, with y = m*x."""
    if x <= 0:
        raise ValueError("condition applies to x > 0")
    z = Fraction(z)
    y = m * x
    term_c1 = 2 * s.intersect(h, s.c1) - z * s.c1_sq
    term_alpha = 2 * s.intersect(h, alpha) - z * s.intersect(s.c1, alpha)
    return (y - 1) * term_c1 - m * term_alpha > 0


@dataclass(frozen=True)
class SpectralNonsplit:
    value: Fraction
    passed: bool


def spectral_nonsplit(
    s: BaseSurface, n: int, m: int, eta: DivisorClass, alpha: DivisorClass
) -> SpectralNonsplit:
    """Spectral-extension non-split criterion:
    3/2 (eta - n c1)^2 - m alpha.(eta - n c1) > 0."""
    resid = eta - s.c1.scale(n)
    value = Fraction(3, 2) * s.square(resid) - m * s.intersect(alpha, resid)
    return SpectralNonsplit(value=value, passed=value > 0)


@dataclass(frozen=True)
class W0NonsplitVerdict:
    passed: bool
    square_ok: bool
    chi_ok: bool
    square_bound: Fraction
    chi_value: Fraction


def w0_nonsplit_delpezzo(n: int, x: int, c1sq) -> W0NonsplitVerdict:
    """Specialized x > 0 non-split inequalities after the [W]=0 substitution:
    x^2 <= 24/(nm)  and  2n + ((3m^3+m^2)nx^2/12 + 144/(mx) - 37n/3 - 20)c1^2 > 24."""
    if x <= 0:
        raise ValueError("condition applies to x > 0")
    m = n + 1
    c1sq = Fraction(c1sq)
    square_bound = Fraction(24, n * m)
    square_ok = x * x <= square_bound
    coeff = (
        Fraction((3 * m**3 + m * m) * n * x * x, 12)
        + Fraction(144, m * x)
        - Fraction(37 * n, 3)
        - 20
    )
    chi_value = 2 * n + coeff * c1sq
    chi_ok = chi_value > 24
    return W0NonsplitVerdict(
        passed=square_ok and chi_ok,
        square_ok=square_ok,
        chi_ok=chi_ok,
        square_bound=square_bound,
        chi_value=chi_value,
    )
