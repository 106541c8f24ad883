"""JSON (de)serialization. Rationals travel as exact "p/q" strings."""

from __future__ import annotations

from fractions import Fraction

from .ring import DivisorX, FourClass
from .surfaces import DivisorClass
from .windows import StabilityWindow


def frac_to_str(f) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def frac_from_str(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s))


def divisor_to_json(d: DivisorClass) -> dict:
    return {"coeffs": [frac_to_str(c) for c in d.coeffs], "torsion": d.torsion}


def divisor_from_json(obj, rank: int | None = None) -> DivisorClass:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("divisor class must be an object with a 'coeffs' field")
    coeffs = tuple(frac_from_str(c) for c in obj["coeffs"])
    d = DivisorClass(coeffs, int(obj.get("torsion", 0)))
    if rank is not None and d.rank != rank:
        raise ValueError("rank mismatch")
    return d


def divisor_x_to_json(d: DivisorX) -> dict:
    return {"x": frac_to_str(d.x), "alpha": divisor_to_json(d.alpha)}


def divisor_x_from_json(obj, rank: int) -> DivisorX:
    if not isinstance(obj, dict) or "x" not in obj or "alpha" not in obj:
        raise ValueError("twist must be an object with 'x' and 'alpha' fields")
    return DivisorX(frac_from_str(obj["x"]), divisor_from_json(obj["alpha"], rank))


def fourclass_to_json(w: FourClass) -> dict:
    return {"beta": divisor_to_json(w.beta), "fiber": frac_to_str(w.fiber)}


def window_to_json(w: StabilityWindow) -> dict:
    out = {
        "variable": w.variable,
        "lower": None if w.lower is None else frac_to_str(w.lower),
        "upper": None if w.upper is None else frac_to_str(w.upper),
        "nonempty": w.nonempty,
        "binding": list(w.binding),
    }
    if w.z_interval_approx is not None:
        out["z_interval_approx"] = [round(v, 12) for v in w.z_interval_approx]
    return out
