"""Integral intersection lattices for the supported base surfaces.

Supported bases: the Hirzebruch surfaces F0/F1, the del Pezzo surfaces
dP0..dP8 and the generic (unnodal) Enriques surface.  Divisor classes are
integer (or rational) vectors in a fixed basis of the free part of
H^2(B,Z); on the Enriques surface an extra bit tracks the 2-torsion
canonical class, which pairs to zero with everything.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

DEFAULT_BOUND = 50

# known numbers of (-1)-classes on dP_k, k = 1..8
MINUS_ONE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


@dataclass(frozen=True)
class DivisorClass:
    """A class in H^2(B); `torsion` marks an added copy of the 2-torsion c1."""

    coeffs: tuple
    torsion: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.torsion not in (0, 1):
            raise ValueError("torsion bit must be 0 or 1")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def free_is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return self.torsion == 0 and self.free_is_zero()

    def _check(self, other: "DivisorClass"):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            (self.torsion + other.torsion) % 2,
        )

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
            (self.torsion + other.torsion) % 2,
        )

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs), self.torsion)

    def scale(self, s) -> "DivisorClass":
        s = Fraction(s)
        if self.torsion and s.denominator != 1:
            raise ValueError("cannot scale a torsion-carrying class by a non-integer")
        t = (self.torsion * s.numerator) % 2 if self.torsion else 0
        return DivisorClass(tuple(s * a for a in self.coeffs), t)

    def __rmul__(self, s):
        return self.scale(s)

    @staticmethod
    def zero(rank: int) -> "DivisorClass":
        return DivisorClass((0,) * rank)


@dataclass(frozen=True)
class ConeVerdict:
    """Effective / nef / ample triple; None means undecidable within bound."""

    effective: bool | None
    nef: bool | None
    ample: bool | None
    notes: tuple = ()


@dataclass(frozen=True)
class MinDegree:
    value: Fraction
    witness: DivisorClass
    bound_limited: bool = False


@dataclass(frozen=True)
class BaseSurface:
    kind: str
    rank: int
    gram: tuple
    c1: DivisorClass
    c2: int
    cone_generators: tuple

    # positive-component selector for the Enriques effective cone; the two
    # components of {C^2 >= 0} are symmetric and this choice is a convention.
    ENRIQUES_H0 = None  # set after class definition

    @property
    def is_enriques(self) -> bool:
        return self.kind == "enriques"

    def intersect(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        if a.rank != self.rank or b.rank != self.rank:
            raise ValueError("rank mismatch")
        total = Fraction(0)
        for i, ai in enumerate(a.coeffs):
            if ai == 0:
                continue
            row = self.gram[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b.coeffs) if bj != 0)
        return total

    def square(self, a: DivisorClass) -> Fraction:
        return self.intersect(a, a)

    @property
    def c1_sq(self) -> Fraction:
        return self.square(self.c1)

    def _gamma11_only(self, c: DivisorClass) -> bool:
        return all(v == 0 for v in c.coeffs[2:])

    def cone_position(self, c: DivisorClass, bound: int = DEFAULT_BOUND) -> ConeVerdict:
        if c.rank != self.rank:
            raise ValueError("rank mismatch")
        if self.is_enriques:
            return self._cone_position_enriques(c, bound)
        pairings = [self.intersect(c, g) for g in self.cone_generators]
        nef = all(p >= 0 for p in pairings)
        ample = all(p > 0 for p in pairings) and self.square(c) > 0
        effective = _in_cone(self.cone_generators, c)
        return ConeVerdict(effective=effective, nef=nef, ample=ample)

    def _cone_position_enriques(self, c: DivisorClass, bound: int) -> ConeVerdict:
        h0 = BaseSurface.ENRIQUES_H0
        if c.free_is_zero():
            # pure torsion (or zero): c1 = f1 - f2 is not effective
            effective = False
        else:
            effective = self.square(c) >= 0 and self.intersect(c, h0) > 0
        if not self._gamma11_only(c):
            note = ("undecidable within bound",)
            return ConeVerdict(effective=effective, nef=None, ample=None, notes=note)
        x, y = c.coeffs[0], c.coeffs[1]
        nef = x >= 0 and y >= 0
        ample = False
        if nef and self.square(c) >= 6:
            ample = all(
                self.intersect(c, e) > 0
                for e in self._effective_gamma11(bound)
            )
        return ConeVerdict(effective=effective, nef=nef, ample=ample)

    def _effective_gamma11(self, bound: int):
        zero = [0] * (self.rank - 2)
        for a in range(bound + 1):
            for b in range(bound + 1):
                if a == 0 and b == 0:
                    continue
                yield DivisorClass((a, b, *zero))

    def min_positive_degree(self, h: DivisorClass, bound: int = DEFAULT_BOUND) -> MinDegree:
        verdict = self.cone_position(h, bound)
        if verdict.ample is not True:
            raise ValueError("polarization not ample")
        if self.is_enriques:
            if not self._gamma11_only(h):
                raise ValueError("Enriques polarization must lie in the Gamma^{1,1} sublattice")
            best = None
            for lam in self._effective_gamma11(bound):
                deg = self.intersect(lam, h)
                if deg > 0 and (best is None or deg < best.value):
                    best = MinDegree(value=deg, witness=lam)
            # the minimum is attained at (1,0) or (0,1); any bound >= 1 certifies it
            limited = bound < 1 or best is None
            if best is None:
                raise ValueError("no effective class of positive degree within bound")
            return MinDegree(best.value, best.witness, bound_limited=limited)
        degs = [(self.intersect(g, h), g) for g in self.cone_generators]
        value, witness = min(degs, key=lambda t: (t[0], t[1].coeffs))
        # all generator degrees are positive (H ample), so the single-generator
        # minimum is the exact minimum over the effective monoid
        return MinDegree(value=value, witness=witness)


def _in_cone(generators, target: DivisorClass) -> bool:
    """Exact test: target is a non-negative rational combination of generators.

    For the del Pezzo / Hirzebruch effective monoids the generating rays are
    saturated, so for integral classes this agrees with membership in the
    monoid of non-negative integer combinations.
    """
    columns = [g.coeffs for g in generators]
    return _feasible_nonneg_combination(columns, target.coeffs)


def _feasible_nonneg_combination(columns, target) -> bool:
    """Phase-1 simplex over Fraction with Bland's rule."""
    m = len(columns)
    n = len(target)
    rows = [[Fraction(columns[j][i]) for j in range(m)] for i in range(n)]
    b = [Fraction(t) for t in target]
    for i in range(n):
        if b[i] < 0:
            rows[i] = [-v for v in rows[i]]
            b[i] = -b[i]
    # tableau: m structural columns, n artificial columns, rhs
    tab = [rows[i] + [Fraction(int(k == i)) for k in range(n)] + [b[i]] for i in range(n)]
    basis = [m + i for i in range(n)]
    # phase-1 objective: minimize the sum of artificials.  Basic (artificial)
    # columns must start with zero reduced cost.
    cost = [Fraction(0)] * (m + n + 1)
    for i in range(n):
        for j in range(m):
            cost[j] -= tab[i][j]
        cost[-1] -= tab[i][-1]
    while True:
        enter = next((j for j in range(m + n) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(n):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if (
                    leave is None
                    or ratio < leave[0]
                    or (ratio == leave[0] and basis[i] < basis[leave[1]])
                ):
                    leave = (ratio, i)
        if leave is None:
            return False
        row = leave[1]
        piv = tab[row][enter]
        tab[row] = [v / piv for v in tab[row]]
        for i in range(n):
            if i != row and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * c for a, c in zip(tab[i], tab[row])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * c for a, c in zip(cost, tab[row])]
        basis[row] = enter
    return -cost[-1] == 0


def minus_one_classes(k: int, bound: int = 20):
    """All classes E on dP_k with E^2 = -1 and E.c1 = 1, by pruned search.

    Basis (l, e_1..e_k), gram diag(1,-1,...,-1).  E = a*l + sum(c_i e_i) must
    satisfy sum(c_i) = 1 - 3a and sum(c_i^2) = a^2 + 1.
    """
    results = []
    for a in range(-bound, bound + 1):
        s_target = 1 - 3 * a
        q_target = a * a + 1
        if k == 0:
            continue
        if s_target * s_target > k * q_target:
            continue
        for tail in _sum_square_solutions(k, s_target, q_target):
            results.append(DivisorClass((a, *tail)))
    results.sort(key=lambda d: d.coeffs)
    return results


def _sum_square_solutions(r, s, q):
    """Integer r-tuples with given coordinate sum s and sum of squares q."""
    if r == 0:
        if s == 0 and q == 0:
            yield ()
        return
    lim = math.isqrt(q)
    for c in range(-lim, lim + 1):
        s2, q2 = s - c, q - c * c
        if q2 < 0 or s2 * s2 > (r - 1) * q2:
            continue
        for tail in _sum_square_solutions(r - 1, s2, q2):
            yield (c, *tail)


@lru_cache(maxsize=None)
def _del_pezzo_generators(k: int):
    if k == 0:
        return (DivisorClass((1,)),)
    gens = list(minus_one_classes(k))
    if len(gens) != MINUS_ONE_COUNTS[k]:
        raise RuntimeError(
            f"dP{k} (-1)-class enumeration produced {len(gens)} classes, "
            f"expected {MINUS_ONE_COUNTS[k]}"
        )
    if k == 1:
        gens.append(DivisorClass((1, -1)))  # fiber class l - e1
    return tuple(sorted(gens, key=lambda d: d.coeffs))


def _e8_gram_negative():
    """E8(-1): negated Cartan matrix; nodes 0..6 a chain, node 7 on node 2."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    return g


@lru_cache(maxsize=None)
def make_base(kind: str) -> BaseSurface:
    """Build a surface descriptor. Accepts 'F0', 'F1', 'dP0'..'dP8', 'enriques'."""
    key = kind.strip().lower()
    if key in ("f0", "hirzebruch0"):
        gram = ((0, 1), (1, 0))
        return BaseSurface(
            kind="F0",
            rank=2,
            gram=gram,
            c1=DivisorClass((2, 2)),
            c2=4,
            cone_generators=(DivisorClass((1, 0)), DivisorClass((0, 1))),
        )
    if key in ("f1", "hirzebruch1"):
        # F1 is isomorphic to dP1; we return the dP1 descriptor
        return make_base("dP1")
    if key.startswith("f") and key[1:].isdigit():
        raise ValueError("unsupported surface")
    if key.startswith("dp"):
        k = int(key[2:])
        if not 0 <= k <= 8:
            raise ValueError("unsupported surface")
        rank = k + 1
        gram = tuple(
            tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
            for i in range(rank)
        )
        c1 = DivisorClass((3, *([-1] * k)))
        return BaseSurface(
            kind=f"dP{k}",
            rank=rank,
            gram=gram,
            c1=c1,
            c2=3 + k,
            cone_generators=_del_pezzo_generators(k),
        )
    if key == "enriques":
        g11 = [[0, 1], [1, 0]]
        e8 = _e8_gram_negative()
        rank = 10
        gram = tuple(
            tuple(
                (g11[i][j] if i < 2 and j < 2 else e8[i - 2][j - 2] if i >= 2 and j >= 2 else 0)
                for j in range(rank)
            )
            for i in range(rank)
        )
        return BaseSurface(
            kind="enriques",
            rank=rank,
            gram=gram,
            c1=DivisorClass((0,) * rank, torsion=1),
            c2=12,
            cone_generators=(),
        )
    raise ValueError("unsupported surface")


BaseSurface.ENRIQUES_H0 = DivisorClass((1, 1) + (0,) * 8)


def signature(gram):
    """Exact (p, n) signature of a symmetric rational matrix."""
    n = len(gram)
    m = [[Fraction(v) for v in row] for row in gram]
    pos = neg = 0
    for k in range(n):
        if m[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                for row in m:
                    row[k], row[swap] = row[swap], row[k]
                m[k], m[swap] = m[swap], m[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    continue
                for row in m:
                    row[k] += row[j]
                m[k] = [a + b for a, b in zip(m[k], m[j])]
        piv = m[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
                for row in m:
                    row[i] = row[i] - f * row[k]
    return pos, neg
