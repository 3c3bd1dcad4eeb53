from __future__ import annotations

import pytest

from poscasimir import datum
from poscasimir.plotting import plot_region
from poscasimir.region import sample_boundaries, sample_region


@pytest.mark.parametrize("suffix", [".png", ".svg", ".pdf"])
def test_figure_is_written_deterministically(tmp_path, suffix):
    d = datum("B2")
    boundary = sample_boundaries(d, steps=30)
    interior = sample_region(d, (0.0, 0.5), steps=10)
    a = plot_region(boundary, tmp_path / f"a{suffix}", interior=interior, log=True)
    b = plot_region(boundary, tmp_path / f"b{suffix}", interior=interior, log=True)
    assert a.stat().st_size > 1000
    assert a.read_bytes() == b.read_bytes()


def test_png_signature(tmp_path):
    path = plot_region(sample_boundaries(datum("G2"), steps=20), tmp_path / "g2.png")
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_rank_check(tmp_path):
    with pytest.raises(ValueError):
        plot_region(sample_boundaries(datum("A3"), steps=3), tmp_path / "a3.png")
