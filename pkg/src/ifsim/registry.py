"""Named, parameterized measure descriptors shared by audit / classify / CLI.

A MeasureDescriptor bundles an IFS-level evaluator (pattern classification,
CLI) with an optional vectorized per-IFV batch kernel (axiom audits sweep
millions of value pairs).  Both views are built from the same kernels, so an
audit exercises exactly the code the scalar API runs.

Built-in names: wu, wu-lambda (param lambda > 0), xiao, yc,
jgamma (param gamma > 0).  xiao, yc and jgamma ignore the weight vector:
xiao and yc average with fixed 1/n as published, and jgamma is a per-value
divergence exposed through its unweighted elementwise mean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

import numpy as np

from . import baselines, measures
from .core import IFS, IfsimError, WeightVector, uniform_weights

Evaluator = Callable[[IFS, IFS, Optional[WeightVector]], float]
BatchKernel = Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class UnknownMeasureError(IfsimError, KeyError):
    """The requested measure name is not registered."""


class InvalidMeasureParamsError(IfsimError, ValueError):
    """Parameters missing, superfluous, or invalid for the named measure."""


@dataclass(frozen=True)
class MeasureDescriptor:
    """A named measure usable by audit, classify, and the repro runner."""

    name: str
    kind: str  # "distance" or "similarity"
    params: Mapping[str, float] = field(default_factory=dict)
    evaluator: Evaluator = None  # type: ignore[assignment]
    pair_batch: BatchKernel | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("distance", "similarity"):
            raise InvalidMeasureParamsError(f"kind must be distance/similarity, got {self.kind!r}")
        if self.evaluator is None:
            raise InvalidMeasureParamsError("evaluator is required")

    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ", ".join(f"{k}={v:g}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"


def _weights_or_uniform(a: IFS, w: WeightVector | None) -> WeightVector:
    return w if w is not None else uniform_weights(len(a))


def _make_wu() -> MeasureDescriptor:
    def ev(a: IFS, b: IFS, w: WeightVector | None) -> float:
        return measures.dist_wu(a, b, _weights_or_uniform(a, w))

    return MeasureDescriptor("wu", "distance", {}, ev, measures.js_norm_batch)


def _make_wu_lambda(lam: float) -> MeasureDescriptor:
    measures._check_lambda(lam)

    def ev(a: IFS, b: IFS, w: WeightVector | None) -> float:
        return measures.dist_wu_lambda(a, b, _weights_or_uniform(a, w), lam)

    def batch(mu_a, nu_a, mu_b, nu_b):
        return measures.js_norm_lambda_batch(mu_a, nu_a, mu_b, nu_b, lam)

    return MeasureDescriptor("wu-lambda", "distance", {"lambda": float(lam)}, ev, batch)


def _make_xiao() -> MeasureDescriptor:
    def ev(a: IFS, b: IFS, w: WeightVector | None) -> float:
        return baselines.dist_xiao(a, b)

    return MeasureDescriptor("xiao", "distance", {}, ev, baselines.xiao_elem_batch)


def _make_yc() -> MeasureDescriptor:
    def ev(a: IFS, b: IFS, w: WeightVector | None) -> float:
        return baselines.dist_yc(a, b)

    return MeasureDescriptor("yc", "distance", {}, ev, baselines.yc_elem_batch)


def _make_jgamma(gamma: float) -> MeasureDescriptor:
    if not (gamma > 0.0):
        raise baselines.InvalidGammaError(f"gamma must be > 0, got {gamma!r}")

    def ev(a: IFS, b: IFS, w: WeightVector | None) -> float:
        vals = baselines.j_gamma_batch(a.mu_array(), a.nu_array(), b.mu_array(), b.nu_array(), gamma)
        return float(np.mean(vals))

    def batch(mu_a, nu_a, mu_b, nu_b):
        return baselines.j_gamma_batch(mu_a, nu_a, mu_b, nu_b, gamma)

    return MeasureDescriptor("jgamma", "distance", {"gamma": float(gamma)}, ev, batch)


_PARAM_NAMES = {
    "wu": (),
    "wu-lambda": ("lambda",),
    "xiao": (),
    "yc": (),
    "jgamma": ("gamma",),
}

MEASURE_NAMES = tuple(_PARAM_NAMES)


def get_measure(name: str, **params: float) -> MeasureDescriptor:
    """Look up a built-in measure; params: lambda (wu-lambda), gamma (jgamma).

    Python-reserved spellings are accepted: get_measure("wu-lambda", lam=x)
    and get_measure("wu-lambda", **{"lambda": x}) are equivalent.
    """
    if "lam" in params:
        params["lambda"] = params.pop("lam")
    if name not in _PARAM_NAMES:
        raise UnknownMeasureError(f"unknown measure {name!r}; known: {', '.join(MEASURE_NAMES)}")
    wanted = _PARAM_NAMES[name]
    missing = [p for p in wanted if p not in params]
    extra = [p for p in params if p not in wanted]
    if missing:
        raise InvalidMeasureParamsError(f"measure {name!r} requires parameter(s): {', '.join(missing)}")
    if extra:
        raise InvalidMeasureParamsError(f"measure {name!r} does not take: {', '.join(extra)}")
    if name == "wu":
        return _make_wu()
    if name == "wu-lambda":
        return _make_wu_lambda(float(params["lambda"]))
    if name == "xiao":
        return _make_xiao()
    if name == "yc":
        return _make_yc()
    return _make_jgamma(float(params["gamma"]))
