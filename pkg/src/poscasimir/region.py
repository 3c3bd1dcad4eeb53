"""
Sampling of the region ``R = Phi(t >= 0)`` and of its boundary faces.

A face ``t_i = 0`` maps onto part of the discriminant variety ``D = 0``.
Samples are plain rows ``(t, C, D, D_s, D_l)`` in deterministic grid order
(first coordinate slowest) and can be written as CSV, JSON or a small
hand-written SVG for rank 2.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .casimir import phi, product_D
from .errors import NumericRangeError
from .polynomials import MultiPoly
from .rootdata import RootDatum
from .weights import fundamental_dims, fundamental_rep

__all__ = ["RegionSample", "sample_boundary", "sample_boundaries", "sample_region",
           "emit", "columns", "normalized_residual", "precise_boundary_points", "DEFAULT_RANGE",
           "default_steps", "MAX_T"]

DEFAULT_RANGE = (0.0, 2.0)
MAX_T = 5.0


def default_steps(rank: int) -> int:
    return 200 if rank <= 2 else 40


def columns(labels: Sequence[int]) -> list[str]:
    return ([f"t_{lab}" for lab in labels] + [f"C_{lab}" for lab in labels]
            + ["D", "D_s", "D_l"])


@dataclass(frozen=True)
class RegionSample:
    """Rows ``(t_1..t_n, C_1..C_n, D, D_s, D_l)`` over a grid in ``t``.

    ``face`` is the node label held at zero for boundary samples, ``None`` for
    full-region samples and ``"all"`` for the union of every face.
    """
    type: str
    labels: tuple[int, ...]
    dims: tuple[int, ...]
    range: tuple[float, float]
    steps: int
    face: int | str | None
    rows: tuple[tuple[float, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def columns(self) -> list[str]:
        return columns(self.labels)


def _check_grid(rng: Sequence[float], steps: int) -> tuple[float, float]:
    lo, hi = float(rng[0]), float(rng[1])
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not (0.0 <= lo < hi <= MAX_T):
        raise NumericRangeError(f"range [{lo}, {hi}] is outside the supported [0, {MAX_T}]")
    return lo, hi


def _row(d: RootDatum, t: Sequence[float]) -> tuple[float, ...]:
    c = phi(d, t).c
    big_d, d_s, d_l = product_D(d, t)
    return tuple(float(x) for x in t) + tuple(c) + (big_d, d_s, d_l)


def _grid_rows(d: RootDatum, axes: list[np.ndarray]) -> tuple[tuple[float, ...], ...]:
    return tuple(_row(d, [float(x) for x in point]) for point in itertools.product(*axes))


def sample_region(d: RootDatum, rng: Sequence[float] = DEFAULT_RANGE,
                  steps: int | None = None) -> RegionSample:
    """``Phi`` over the full grid ``linspace(lo, hi, steps)^n``."""
    steps = default_steps(d.rank) if steps is None else steps
    lo, hi = _check_grid(rng, steps)
    axis = np.linspace(lo, hi, steps)
    rows = _grid_rows(d, [axis] * d.rank)
    return RegionSample(str(d.lie_type), d.labels, fundamental_dims(d), (lo, hi),
                        steps, None, rows)


def sample_boundary(d: RootDatum, i: int, rng: Sequence[float] = DEFAULT_RANGE,
                    steps: int | None = None) -> RegionSample:
    """``Phi`` on the face ``t_i = 0`` (``i`` a node label)."""
    steps = default_steps(d.rank) if steps is None else steps
    lo, hi = _check_grid(rng, steps)
    p = d.index(i)
    axis = np.linspace(lo, hi, steps)
    axes = [np.zeros(1) if q == p else axis for q in range(d.rank)]
    rows = _grid_rows(d, axes)
    return RegionSample(str(d.lie_type), d.labels, fundamental_dims(d), (lo, hi),
                        steps, i, rows)


def sample_boundaries(d: RootDatum, rng: Sequence[float] = DEFAULT_RANGE,
                      steps: int | None = None) -> RegionSample:
    """Concatenation of :func:`sample_boundary` over every node, in label order."""
    parts = [sample_boundary(d, lab, rng, steps) for lab in d.labels]
    rows = tuple(r for part in parts for r in part.rows)
    first = parts[0]
    return RegionSample(first.type, first.labels, first.dims, first.range,
                        first.steps, "all", rows)


def _mpf_fraction(x) -> Fraction:
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp


def precise_boundary_points(d: RootDatum, i: int, rng: Sequence[float] = DEFAULT_RANGE,
                            steps: int | None = None, dps: int = 100
                            ) -> list[tuple[Fraction, ...]]:
    """``(C_1..C_n)`` on the grid of :func:`sample_boundary`, in ``dps``-digit arithmetic.

    Doubles cannot place a point with ``|C| ~ 1e30`` within ``1e-6`` of a curve;
    these exact rationals can, so boundary equations are testable over the
    whole default range.
    """
    steps = default_steps(d.rank) if steps is None else steps
    lo, hi = _check_grid(rng, steps)
    p = d.index(i)
    axis = np.linspace(lo, hi, steps)
    axes = [np.zeros(1) if q == p else axis for q in range(d.rank)]
    mp = mpmath.MPContext()
    mp.dps = dps
    systems = [fundamental_rep(d, lab).root_coords for lab in d.labels]
    out = []
    for point in itertools.product(*axes):
        t = [mp.mpf(float(x)) for x in point]
        scale = -4 * mp.pi
        row = []
        for rcs in systems:
            total = mp.fsum(m * mp.exp(scale * mp.fsum(mp.mpf(c.numerator) / c.denominator * x
                                                      for c, x in zip(rc, t) if c))
                            for rc, m in rcs)
            row.append(_mpf_fraction(total))
        out.append(tuple(row))
    return out


def normalized_residual(poly: MultiPoly, point: Sequence[float]) -> float | None:
    """``|f(p)| / |grad f(p)|`` evaluated exactly at the binary value of ``p``.

    Returns ``None`` where the gradient vanishes (a singular point).
    """
    exact = [Fraction(x) for x in point]
    value = Fraction(poly.evaluate(exact))
    norm2 = sum(Fraction(g.evaluate(exact)) ** 2 for g in poly.gradient())
    if norm2 == 0:
        return None
    return math.sqrt(float(value * value / norm2))


# -- output ----------------------------------------------------------------

def _fmt(x: float) -> str:
    return repr(float(x))


def _emit_csv(sample: RegionSample) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(sample.columns)
    for row in sample.rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue().encode()


def _emit_json(sample: RegionSample) -> bytes:
    cols = sample.columns
    parts = []
    for row in sample.rows:
        body = ", ".join(f'"{c}": {json.dumps(float(x))}' for c, x in zip(cols, row))
        parts.append("{" + body + "}")
    return ("[\n" + ",\n".join(parts) + "\n]\n").encode() if parts else b"[]\n"


def face_curves(sample: RegionSample) -> dict[int, list[tuple[float, float]]]:
    """Rank-2 boundary polylines ``(C_1, C_2)`` keyed by the node held at zero."""
    curves = {}
    for p, lab in enumerate(sample.labels):
        other = 1 - p
        # the cusp lies on every face, keep it once
        pts = sorted({(row[other], row[2], row[3]) for row in sample.rows if row[p] == 0.0})
        curves[lab] = [(x, y) for _, x, y in pts]
    return curves


def _emit_svg(sample: RegionSample, log: bool = False) -> bytes:
    if sample.rank != 2:
        raise ValueError(f"SVG output needs rank 2, {sample.type} has rank {sample.rank}")
    size, margin = 480, 56
    curves = face_curves(sample)
    cusp = sample.dims
    xs = [cusp[0]] + [x for pts in curves.values() for x, _ in pts]
    ys = [cusp[1]] + [y for pts in curves.values() for _, y in pts]
    f = math.log10 if log else (lambda v: v)
    x0, x1 = f(min(xs)), f(max(xs))
    y0, y1 = f(min(ys)), f(max(ys))
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = y1 if y1 > y0 else y0 + 1
    span = size - 2 * margin

    def sx(v):
        return margin + (f(v) - x0) / (x1 - x0) * span

    def sy(v):
        return size - margin - (f(v) - y0) / (y1 - y0) * span

    labels = sample.labels
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<title>{sample.type} region boundary</title>',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<g id="axes" stroke="black" stroke-width="1">'
        f'<line x1="{margin}" y1="{size - margin}" x2="{size - margin}" y2="{size - margin}"/>'
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{size - margin}"/></g>',
    ]
    for j in range(5):
        fx = x0 + (x1 - x0) * j / 4
        fy = y0 + (y1 - y0) * j / 4
        vx = 10 ** fx if log else fx
        vy = 10 ** fy if log else fy
        px = margin + span * j / 4
        py = size - margin - span * j / 4
        out.append(f'<text x="{px:.2f}" y="{size - margin + 16}" font-size="10" '
                   f'text-anchor="middle">{vx:.4g}</text>')
        out.append(f'<text x="{margin - 4}" y="{py + 3:.2f}" font-size="10" '
                   f'text-anchor="end">{vy:.4g}</text>')
    out.append(f'<text x="{size / 2:.0f}" y="{size - 12}" font-size="12" '
               f'text-anchor="middle">C_{labels[0]}</text>')
    out.append(f'<text x="14" y="{size / 2:.0f}" font-size="12" text-anchor="middle" '
               f'transform="rotate(-90 14 {size / 2:.0f})">C_{labels[1]}</text>')
    colors = ("#1f77b4", "#d62728")
    for (lab, pts), color in zip(sorted(curves.items()), colors):
        if not pts:
            continue
        coords = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in pts)
        out.append(f'<polyline id="face-{lab}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5" points="{coords}"/>')
    out.append(f'<circle id="cusp" cx="{sx(cusp[0]):.3f}" cy="{sy(cusp[1]):.3f}" r="4" '
               f'fill="black" data-x="{cusp[0]}" data-y="{cusp[1]}"/>')
    out.append(f'<text x="{sx(cusp[0]) + 6:.3f}" y="{sy(cusp[1]) - 6:.3f}" '
               f'font-size="11">({cusp[0]}, {cusp[1]})</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()


def emit(sample: RegionSample, fmt: str, log: bool = False) -> bytes:
    """Serialize a sample as ``csv``, ``json`` or ``svg`` (rank 2 only)."""
    if fmt == "csv":
        return _emit_csv(sample)
    if fmt == "json":
        return _emit_json(sample)
    if fmt == "svg":
        return _emit_svg(sample, log)
    raise ValueError(f"unknown format {fmt!r}")
