"""Exhaustive model scans: validity -> anomaly -> non-split -> stability.

Search configs describe finite integer boxes; enumeration is lexicographic
and the JSONL output is deterministic for any worker count.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import jsonio
from .anomaly import anomaly_class, spectral_af
from .bundles import PullbackBundle, SpectralBundle, validate_bundle
from .nonsplit import nonsplit_feasible, spectral_nonsplit
from .ring import DivisorX
from .surfaces import BaseSurface, DivisorClass, DEFAULT_BOUND, make_base
from .windows import (
    StabilityWindow,
    spectral_stability_check,
    window_delpezzo,
    window_enriques,
)

STAGES = ("validity", "anomaly", "nonsplit", "stability")


@dataclass(frozen=True)
class Polarization:
    H: DivisorClass | None = None  # explicit polarization class
    h: Fraction | None = None  # H = h * c1 on a base with -K ample


@dataclass
class ModelRecord:
    params: dict
    verdicts: dict
    overall: bool
    failed_stage: str | None

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "verdicts": self.verdicts,
            "overall": self.overall,
            "failed_stage": self.failed_stage,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=False)


def _window_verdict(window: StabilityWindow) -> dict:
    out = jsonio.window_to_json(window)
    out["passed"] = window.nonempty
    return out


def check_model(
    s: BaseSurface,
    bundle,
    pol: Polarization,
    require: str | None = None,
    bound: int = DEFAULT_BOUND,
    short_circuit: bool = True,
    params: dict | None = None,
) -> ModelRecord:
    """Run the full verification pipeline on one model."""
    verdicts: dict = {}
    failed: str | None = None

    def fail(stage):
        nonlocal failed
        if failed is None:
            failed = stage

    # validity
    try:
        validate_bundle(s, bundle)
        verdicts["validity"] = {"passed": True}
    except ValueError as exc:
        verdicts["validity"] = {"passed": False, "error": str(exc)}
        fail("validity")
        return ModelRecord(params or {}, verdicts, False, failed)

    # anomaly
    outcome = anomaly_class(s, bundle)
    det = {
        "wB": jsonio.divisor_to_json(outcome.wB),
        "af": jsonio.frac_to_str(outcome.af),
        "W_zero": outcome.W_zero,
        "W_effective": outcome.W_effective,
    }
    if (
        isinstance(bundle, SpectralBundle)
        and bundle.twist.x == 0
        and bundle.eta == s.c1.scale(12)
    ):
        rep = spectral_af(s, bundle.n, bundle.lam, bundle.twist.alpha, bundle.eta)
        det["af_displayed"] = jsonio.frac_to_str(rep.af_displayed)
        det["af_direct"] = jsonio.frac_to_str(rep.af_direct)
        det["display_agrees"] = rep.agree
    if require == "W_zero":
        passed = outcome.W_zero
    elif require == "W_effective":
        passed = outcome.W_effective is True
    else:
        passed = True
    det["passed"] = passed
    verdicts["anomaly"] = det
    if not passed:
        fail("anomaly")
        if short_circuit:
            return ModelRecord(params or {}, verdicts, False, failed)

    # non-split
    if isinstance(bundle, PullbackBundle):
        try:
            h_class, z_rep = _pullback_polarization(s, pol)
        except ValueError as exc:
            verdicts["nonsplit"] = {"passed": False, "error": str(exc)}
            fail("nonsplit")
            return ModelRecord(params or {}, verdicts, False, failed)
        ns = nonsplit_feasible(
            s, bundle.n, int(bundle.twist.x), bundle.twist.alpha, bundle.c2E, h_class, z_rep
        )
        verdicts["nonsplit"] = {
            "passed": ns.passed,
            "clause": ns.clause,
            "value": jsonio.frac_to_str(ns.value),
        }
    else:
        ns = spectral_nonsplit(s, bundle.n, bundle.n + 1, bundle.eta, bundle.twist.alpha)
        verdicts["nonsplit"] = {
            "passed": ns.passed,
            "clause": "spectral chi>0",
            "value": jsonio.frac_to_str(ns.value),
        }
    if not ns.passed:
        fail("nonsplit")
        if short_circuit:
            return ModelRecord(params or {}, verdicts, False, failed)

    # stability
    if isinstance(bundle, PullbackBundle):
        x = int(bundle.twist.x)
        if s.is_enriques:
            a = s.intersect(bundle.twist.alpha, pol.H)
            window = window_enriques(bundle.n, x, a, s.square(pol.H))
        else:
            a = s.intersect(bundle.twist.alpha, s.c1)
            window = window_delpezzo(bundle.n, x, a, s.c1_sq, pol.h)
        verdicts["stability"] = _window_verdict(window)
        stable = window.nonempty
    else:
        ver = spectral_stability_check(s, bundle.n, bundle.twist.alpha, _spectral_h(s, pol), bound)
        verdicts["stability"] = {
            "passed": ver.passed,
            "alpha_H": jsonio.frac_to_str(ver.a_h),
            "n_alpha_H": jsonio.frac_to_str(ver.n_a_h),
            "min_degree": jsonio.frac_to_str(ver.min_degree),
            "witness": jsonio.divisor_to_json(ver.witness),
            "bound_limited": ver.bound_limited,
        }
        stable = ver.passed
    if not stable:
        fail("stability")

    return ModelRecord(params or {}, verdicts, failed is None, failed)


def _pullback_polarization(s: BaseSurface, pol: Polarization):
    if s.is_enriques:
        if pol.H is None:
            raise ValueError("Enriques pullback models need an explicit polarization H")
        return pol.H, Fraction(1)
    if pol.h is None:
        raise ValueError("pullback models on a -K-ample base need the ray parameter h")
    h = Fraction(pol.h)
    return s.c1.scale(h), h


def _spectral_h(s: BaseSurface, pol: Polarization) -> DivisorClass:
    if pol.H is not None:
        return pol.H
    if pol.h is not None:
        return s.c1.scale(Fraction(pol.h))
    raise ValueError("spectral models need a polarization (H or h)")


# ---------------------------------------------------------------------------
# search configs and enumeration


@dataclass
class SearchConfig:
    base: str
    mode: str  # "pullback" | "spectral"
    n_range: tuple
    x_values: tuple = (0,)
    alpha_box: tuple = ()
    c2E_range: tuple | None = None
    eta_box: tuple | None = None
    lambda_values: tuple = ()
    H_values: tuple = ()
    h_values: tuple = ()
    require: str | None = None
    bound: int = DEFAULT_BOUND
    limit: int | None = None

    @staticmethod
    def from_json(obj: dict) -> "SearchConfig":
        if not isinstance(obj, dict):
            raise ValueError("config must be a JSON object")
        for key in ("base", "mode", "n_range"):
            if key not in obj:
                raise ValueError(f"config missing required field '{key}'")
        mode = obj["mode"]
        if mode not in ("pullback", "spectral"):
            raise ValueError("mode must be 'pullback' or 'spectral'")
        if "x_values" in obj:
            x_values = tuple(int(v) for v in obj["x_values"])
        elif "x_range" in obj:
            lo, hi = obj["x_range"]
            x_values = tuple(range(int(lo), int(hi) + 1))
        else:
            x_values = (0,)
        require = obj.get("require")
        if require not in (None, "W_zero", "W_effective"):
            raise ValueError("require must be 'W_zero', 'W_effective' or null")
        return SearchConfig(
            base=str(obj["base"]),
            mode=mode,
            n_range=tuple(int(v) for v in obj["n_range"]),
            x_values=x_values,
            alpha_box=tuple(tuple(int(v) for v in pair) for pair in obj.get("alpha_box", [])),
            c2E_range=tuple(int(v) for v in obj["c2E_range"]) if "c2E_range" in obj else None,
            eta_box=tuple(tuple(int(v) for v in pair) for pair in obj["eta_box"]) if "eta_box" in obj else None,
            lambda_values=tuple(jsonio.frac_from_str(v) for v in obj.get("lambda_values", [])),
            H_values=tuple(tuple(int(c) for c in vec) for vec in obj.get("H_values", [])),
            h_values=tuple(jsonio.frac_from_str(v) for v in obj.get("h_values", [])),
            require=require,
            bound=int(obj.get("bound", DEFAULT_BOUND)),
            limit=obj.get("limit"),
        )

    def to_json(self) -> dict:
        out = {
            "base": self.base,
            "mode": self.mode,
            "n_range": list(self.n_range),
            "x_values": list(self.x_values),
            "alpha_box": [list(p) for p in self.alpha_box],
            "require": self.require,
            "bound": self.bound,
            "limit": self.limit,
        }
        if self.c2E_range is not None:
            out["c2E_range"] = list(self.c2E_range)
        if self.eta_box is not None:
            out["eta_box"] = [list(p) for p in self.eta_box]
        if self.lambda_values:
            out["lambda_values"] = [jsonio.frac_to_str(v) for v in self.lambda_values]
        if self.H_values:
            out["H_values"] = [list(v) for v in self.H_values]
        if self.h_values:
            out["h_values"] = [jsonio.frac_to_str(v) for v in self.h_values]
        return out


def _padded_class(coeffs, rank) -> DivisorClass:
    coeffs = tuple(coeffs)
    if len(coeffs) > rank:
        raise ValueError("rank mismatch")
    return DivisorClass(coeffs + (0,) * (rank - len(coeffs)))


def _axes(config: SearchConfig, s: BaseSurface):
    """Ordered (name, values) axes spanning the parameter box."""
    axes = [("n", tuple(range(config.n_range[0], config.n_range[1] + 1)))]
    if config.mode == "pullback":
        axes.append(("x", config.x_values))
    for i, (lo, hi) in enumerate(config.alpha_box):
        axes.append((f"alpha{i}", tuple(range(lo, hi + 1))))
    if config.mode == "pullback":
        if config.c2E_range is None:
            raise ValueError("pullback searches need c2E_range")
        axes.append(("c2E", tuple(range(config.c2E_range[0], config.c2E_range[1] + 1))))
    else:
        for i, (lo, hi) in enumerate(config.eta_box or ()):
            axes.append((f"eta{i}", tuple(range(lo, hi + 1))))
        axes.append(("lambda", config.lambda_values or (Fraction(0),)))
    pols = []
    for vec in config.H_values:
        pols.append(("H", vec))
    for h in config.h_values:
        pols.append(("h", h))
    if not pols:
        raise ValueError("config needs H_values or h_values")
    axes.append(("pol", tuple(pols)))
    return axes


def _decode(axes, index):
    values = {}
    for name, vals in reversed(axes):
        index, r = divmod(index, len(vals))
        values[name] = vals[r]
    return values


def _box_volume(axes) -> int:
    total = 1
    for _, vals in axes:
        total *= len(vals)
    return total


def _instantiate(config: SearchConfig, s: BaseSurface, values: dict):
    n = values["n"]
    n_alpha = len(config.alpha_box)
    alpha = _padded_class(tuple(values[f"alpha{i}"] for i in range(n_alpha)), s.rank)
    kind, payload = values["pol"]
    if kind == "H":
        pol = Polarization(H=_padded_class(payload, s.rank))
        pol_json = {"H": list(payload)}
    else:
        pol = Polarization(h=Fraction(payload))
        pol_json = {"h": jsonio.frac_to_str(payload)}
    params = {"base": s.kind, "n": n, "alpha": [str(c) for c in alpha.coeffs], **pol_json}
    if config.mode == "pullback":
        x = values["x"]
        bundle = PullbackBundle(n=n, c2E=values["c2E"], twist=DivisorX(x, alpha))
        params.update({"x": x, "c2E": values["c2E"]})
    else:
        n_eta = len(config.eta_box or ())
        if n_eta:
            eta = _padded_class(tuple(values[f"eta{i}"] for i in range(n_eta)), s.rank)
        else:
            eta = s.c1.scale(12)
        lam = values["lambda"]
        bundle = SpectralBundle(n=n, eta=eta, lam=lam, twist=DivisorX(0, alpha))
        params.update(
            {"eta": [str(c) for c in eta.coeffs], "lambda": jsonio.frac_to_str(lam)}
        )
    return bundle, pol, params


@dataclass
class SearchSummary:
    scanned: int = 0
    passed: int = 0
    stage_failures: dict = field(default_factory=lambda: {k: 0 for k in STAGES})

    def to_json(self) -> dict:
        return {
            "scanned": self.scanned,
            "passed": self.passed,
            "stage_failures": self.stage_failures,
        }


def _emit(record: ModelRecord, require: str | None) -> bool:
    """Records are emitted unconditionally without a requirement; with one,
    only records meeting the anomaly requirement appear in the stream."""
    if require is None:
        return True
    return record.verdicts.get("anomaly", {}).get("passed") is True


def _evaluate_range(config: SearchConfig, start: int, stop: int):
    s = make_base(config.base)
    axes = _axes(config, s)
    lines = []
    summary = SearchSummary()
    for index in range(start, stop):
        values = _decode(axes, index)
        bundle, pol, params = _instantiate(config, s, values)
        record = check_model(
            s, bundle, pol, require=config.require, bound=config.bound, params=params
        )
        summary.scanned += 1
        if record.overall:
            summary.passed += 1
        else:
            summary.stage_failures[record.failed_stage] += 1
        if _emit(record, config.require):
            lines.append(record.to_json_line())
    return lines, summary


def _search_chunk(config_json: dict, start: int, stop: int):
    config = SearchConfig.from_json(config_json)
    lines, summary = _evaluate_range(config, start, stop)
    return lines, summary.to_json()


def enumerate_models(config: SearchConfig):
    """Yield a ModelRecord per lattice point of the box, in lex order.

    With a requirement set, only records meeting it are yielded.
    """
    s = make_base(config.base)
    axes = _axes(config, s)
    for index in range(_box_volume(axes)):
        values = _decode(axes, index)
        bundle, pol, params = _instantiate(config, s, values)
        record = check_model(
            s, bundle, pol, require=config.require, bound=config.bound, params=params
        )
        if _emit(record, config.require):
            yield record


def run_search(config: SearchConfig, jobs: int = 1, out=None, limit: int | None = None):
    """Scan the whole box; write JSONL records to `out`; return the summary.

    Output is byte-identical for any `jobs` value: chunks are merged in
    enumeration order before writing.
    """
    s = make_base(config.base)
    axes = _axes(config, s)
    total = _box_volume(axes)
    if limit is None:
        limit = config.limit
    summary = SearchSummary()
    emitted = 0

    def write_lines(lines):
        nonlocal emitted
        for line in lines:
            if limit is not None and emitted >= limit:
                return
            if out is not None:
                out.write(line + "\n")
            emitted += 1

    if jobs <= 1 or total <= 1:
        chunks = [(0, total)]
    else:
        step = max(1, -(-total // (jobs * 4)))
        chunks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]

    if jobs <= 1 or len(chunks) == 1:
        for lo, hi in chunks:
            lines, part = _evaluate_range(config, lo, hi)
            _merge_summary(summary, part.to_json())
            write_lines(lines)
    else:
        cfg = config.to_json()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_search_chunk, cfg, lo, hi) for lo, hi in chunks]
            for fut in futures:
                lines, part = fut.result()
                _merge_summary(summary, part)
                write_lines(lines)
    summary_obj = summary.to_json()
    summary_obj["emitted"] = emitted
    if out is not None:
        out.write("# " + json.dumps(summary_obj, separators=(",", ":")) + "\n")
    return summary_obj


def _merge_summary(summary: SearchSummary, part: dict):
    summary.scanned += part["scanned"]
    summary.passed += part["passed"]
    for key, val in part["stage_failures"].items():
        if key is not None and key != "null":
            summary.stage_failures[key] = summary.stage_failures.get(key, 0) + val
