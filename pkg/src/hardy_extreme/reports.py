"""Instance files in, JSON reports out.

Complex numbers travel as [re, im] pairs.  Field names of the report are
pinned by schemas/report.schema.json.
"""
import json
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import __version__
from .circle import AnalyticPolynomial
from .errors import HardyError

TOOL = "hardy-extreme"


class InstanceError(HardyError):
    pass


@dataclass(frozen=True)
class ProblemInstance:
    coefficients: tuple
    holes: tuple
    config: dict = field(default_factory=dict)
    expect: str = None

    @property
    def polynomial(self):
        return AnalyticPolynomial([complex(re, im) for re, im in self.coefficients])


def _pair(x):
    z = complex(x)
    return [float(z.real), float(z.imag)]


def pairs(values):
    return [_pair(v) for v in values]


def parse_instance(data):
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    unknown = set(data) - {"coefficients", "holes", "config", "expect"}
    if unknown:
        raise InstanceError(f"unknown instance fields: {sorted(unknown)}")
    coeffs = data.get("coefficients")
    if not isinstance(coeffs, list) or not coeffs:
        raise InstanceError("'coefficients' must be a nonempty list of [re, im] pairs")
    parsed = []
    for c in coeffs:
        if (
            not isinstance(c, list)
            or len(c) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in c)
        ):
            raise InstanceError(f"bad coefficient entry {c!r}; expected [re, im]")
        if not all(np.isfinite(c)):
            raise InstanceError(f"non-finite coefficient {c!r}")
        parsed.append((float(c[0]), float(c[1])))
    if not any(re or im for re, im in parsed):
        raise InstanceError("all coefficients are zero")
    holes = data.get("holes", [])
    if not isinstance(holes, list) or not all(
        isinstance(k, int) and not isinstance(k, bool) for k in holes
    ):
        raise InstanceError("'holes' must be a list of integers")
    if any(k < 1 for k in holes) or any(b <= a for a, b in zip(holes, holes[1:])):
        raise InstanceError("holes must be positive and strictly increasing")
    config = data.get("config", {})
    if not isinstance(config, dict):
        raise InstanceError("'config' must be an object")
    expect = data.get("expect")
    if expect not in (None, "extreme", "non-extreme"):
        raise InstanceError("'expect' must be 'extreme' or 'non-extreme'")
    return ProblemInstance(tuple(parsed), tuple(holes), dict(config), expect)


def load_instance(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InstanceError(f"cannot read instance {path}: {exc}") from exc
    return parse_instance(data)


def instance_dict(f, holes, **extra):
    """Instance JSON for a polynomial and hole list (used to write corpora)."""
    out = {"coefficients": pairs(f.coeffs), "holes": [int(k) for k in holes]}
    out.update(extra)
    return out


def factorization_dict(fac, scale=1.0):
    return {
        "inner_zeros": pairs(fac.inner.zeros),
        "unimodular_constant": _pair(fac.inner.unimodular_constant),
        "outer_coefficients": pairs(fac.outer.coeffs * scale),
        "normalization_scale": float(scale),
    }


def verdict_dict(v):
    return {
        "is_extreme": bool(v.is_extreme),
        "reason": v.reason,
        "m": int(v.m),
        "M": int(v.M),
        "rank": int(v.rank),
        "kernel_dim": int(v.kernel_dim),
        "singular_values": [float(s) for s in v.singular_values],
        "condition_flag": v.condition_flag,
        "normalization_scale": float(v.normalization_scale),
        "p0_residual": float(v.p0_residual),
    }


def check_dict(chk):
    return {
        "norm_plus": float(chk.norm_plus),
        "norm_minus": float(chk.norm_minus),
        "residuals_plus": [float(r) for r in chk.residuals_plus],
        "residuals_minus": [float(r) for r in chk.residuals_minus],
        "g_sup": float(chk.g_sup),
        "tol": float(chk.tol),
        "passed": bool(chk.passed),
    }


def witness_dict(w, chk):
    return {
        "p_vector": [float(x) for x in w.p.vector],
        "epsilon": float(w.epsilon),
        "centering_constant": float(w.centering_constant),
        "h_inf_norm": float(w.h_inf_norm),
        "g_numerator": pairs(w.g.numerator.coeffs),
        "g_poles": [
            {
                "a": _pair(a),
                "pole": None if a == 0 else _pair(1 / np.conj(a)),
                "multiplicity": int(d),
            }
            for a, d in w.g.factors
        ],
        "verification": check_dict(chk),
    }


def build_report(instance, verdict, config, *, witness=None, witness_error=None,
                 emit_matrix=False, seed=None, timing=None):
    report = {
        "tool": TOOL,
        "version": __version__,
        "instance": {"coefficients": [list(c) for c in instance.coefficients],
                     "holes": list(instance.holes)},
        "tolerances": config.as_dict(),
        "seed": seed,
        "verdict": verdict_dict(verdict),
        "factorization": factorization_dict(verdict.factorization, verdict.normalization_scale),
        "matrix": verdict.matrix.matrix.tolist() if emit_matrix else None,
        "witness": witness_dict(*witness) if witness else None,
        "witness_error": witness_error,
    }
    if timing is not None:
        report["timing"] = {"seconds": float(timing)}
    return report


def dumps(report):
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def report_schema():
    text = resources.files("hardy_extreme").joinpath("schemas/report.schema.json").read_text("utf-8")
    return json.loads(text)
