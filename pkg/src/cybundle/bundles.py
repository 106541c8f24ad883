"""Chern-class arithmetic for extension bundles and spectral cover bundles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ring import DivisorX, FourClass, divisor_square, pair_four_two, triple_product
from .surfaces import BaseSurface, DivisorClass


@dataclass(frozen=True)
class PullbackBundle:
    """Extension of O(nD) by pi^*E(-D), with E rank n, c1(E)=0 on B."""

    n: int
    c2E: int
    twist: DivisorX


@dataclass(frozen=True)
class SpectralBundle:
    """Extension of O(nD) by V_n(-D), with V_n a spectral bundle (n, eta, lam)."""

    n: int
    eta: DivisorClass
    lam: Fraction
    twist: DivisorX

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))


@dataclass(frozen=True)
class ExtensionChern:
    c2: FourClass
    c3: Fraction
    integral: bool


def validate_bundle(s: BaseSurface, bundle) -> None:
    """Raise ValueError if the bundle data violates its invariants."""
    if bundle.n < 2:
        raise ValueError("bundle rank n must be >= 2")
    d = bundle.twist
    if d.alpha.rank != s.rank:
        raise ValueError("rank mismatch")
    if not d.is_integral():
        # half-integral twists are allowed only when 2D is integral
        two_d = DivisorX(2 * d.x, d.alpha.scale(2))
        if not two_d.is_integral():
            raise ValueError("twist must be integral or half-integral")
    if isinstance(bundle, PullbackBundle) and d.x.denominator != 1:
        raise ValueError("pullback twist must have integer sigma-coefficient")
    if isinstance(bundle, SpectralBundle):
        if d.x != 0:
            raise ValueError("spectral extensions use twists D = pi^*alpha (x = 0)")
        check_spectral_data(s, bundle.n, bundle.eta, bundle.lam)


def check_spectral_data(s: BaseSurface, n: int, eta: DivisorClass, lam: Fraction) -> None:
    """Parity and irreducibility constraints on spectral data (n, eta, lambda)."""
    lam = Fraction(lam)
    if eta.rank != s.rank:
        raise ValueError("rank mismatch")
    if n % 2 == 0:
        if (lam - Fraction(1, 2)).denominator != 1:
            raise ValueError("spectral data invalid")
    else:
        if lam.denominator != 1:
            raise ValueError("spectral data invalid")
        diff = eta - s.c1
        if not diff.is_integral() or any(c.numerator % 2 != 0 for c in diff.coeffs):
            raise ValueError("spectral data invalid")
        if diff.torsion != 0:
            raise ValueError("spectral data invalid")
    resid = eta - s.c1.scale(n)
    if s.cone_position(resid).effective is not True:
        raise ValueError("spectral data invalid: eta - n*c1 not effective")


def chern_extension(
    s: BaseSurface,
    p: int,
    q: int,
    d: DivisorX,
    c2u: FourClass,
    c2w: FourClass,
    c3u: Fraction = Fraction(0),
    c3w: Fraction = Fraction(0),
) -> ExtensionChern:
    """Chern classes of a two-block extension with twist D.

    c2(V) = -1/2 pq(p+q) D^2 + c2(U) + c2(W)
    c3(V) = 1/3 pq(p^2-q^2) D^3 + 2(q c2(U) - p c2(W)).D + c3(U) + c3(W)
    """
    if p < 0 or q < 0 or p + q < 2:
        raise ValueError("ranks must satisfy p,q >= 0 and p+q >= 2")
    d2 = divisor_square(s, d)
    d3 = triple_product(s, d, d, d)
    c2v = d2.scale(Fraction(-p * q * (p + q), 2)) + c2u + c2w
    mixed = c2u.scale(q) - c2w.scale(p)
    c3v = (
        Fraction(p * q * (p * p - q * q), 3) * d3
        + 2 * pair_four_two(s, mixed, d)
        + Fraction(c3u)
        + Fraction(c3w)
    )
    integral = (
        c2v.beta.is_integral()
        and c2v.fiber.denominator == 1
        and c3v.denominator == 1
    )
    return ExtensionChern(c2=c2v, c3=c3v, integral=integral)


def c2_spectral(s: BaseSurface, n: int, eta: DivisorClass, lam: Fraction) -> FourClass:
    """c2 of a spectral cover bundle V_n with data (eta, lambda)."""
    lam = Fraction(lam)
    check_spectral_data(s, n, eta, lam)
    fiber = (
        -Fraction(n**3 - n, 24) * s.c1_sq
        + Fraction(1, 2)
        * (lam * lam - Fraction(1, 4))
        * n
        * s.intersect(eta, eta - s.c1.scale(n))
    )
    if fiber.denominator != 1:
        raise ValueError("non-integral Chern class")
    return FourClass(eta, fiber)


def bundle_chern(s: BaseSurface, bundle) -> ExtensionChern:
    """c2/c3 of the full rank-(n+1) extension V defined by the bundle spec."""
    n = bundle.n
    if isinstance(bundle, PullbackBundle):
        c2u = FourClass.fiber_class(s.rank, bundle.c2E)
    elif isinstance(bundle, SpectralBundle):
        c2u = c2_spectral(s, n, bundle.eta, bundle.lam)
    else:
        raise TypeError(f"unknown bundle spec {type(bundle)!r}")
    zero = FourClass.zero(s.rank)
    return chern_extension(s, n, 1, bundle.twist, c2u, zero)
