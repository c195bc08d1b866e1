# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import io
import math
from typing import Sequence

import matplotlib
from matplotlib.figure import Figure

from crystalline.polygons import Polygon

#: Line colors, cycled over the polygons.
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_RC = {"svg.hashsalt": "crystalline", "svg.fonttype": "none", "path.simplify": False}


def polygon_svg(polygons: Sequence[Polygon], labels: Sequence[str] | None = None) -> str:
    """
    Draws polygons over the integer lattice and returns the SVG document.

    Every polygon is a polyline with its break points marked; the label sits
    next to the right endpoint. Output is byte-stable for equal input: the
    creation date is omitted and element ids are salted with a constant.

    :param polygons: At least one polygon.
    :type polygons: Sequence[Polygon]
    :param labels: One label per polygon; defaults to nu_1, nu_2, ...
    :type labels: Sequence[str] | None
    :rtype: str
    """
    if not polygons:
        raise ValueError("Nothing to draw")
    if not labels:
        labels = [f"ν_{i}" for i in range(1, len(polygons) + 1)]
    if len(labels) != len(polygons):
        raise ValueError(f"{len(labels)} labels for {len(polygons)} polygons")
    width = max(polygon.rank for polygon in polygons)
    height = max(math.ceil(polygon.height) for polygon in polygons)
    with matplotlib.rc_context(_RC):
        figure = Figure(figsize=(1 + 0.6 * max(width, 2), 1 + 0.6 * max(height, 2)))
        axes = figure.add_subplot()
        axes.set_xticks(range(width + 1))
        axes.set_yticks(range(height + 1))
        axes.set_xlim(-0.5, width + 1)
        axes.set_ylim(-0.5, height + 0.5)
        axes.set_aspect("equal")
        axes.grid(True, color="#dddddd", linewidth=0.8)
        axes.set_axisbelow(True)
        for index, (polygon, label) in enumerate(zip(polygons, labels)):
            color = COLORS[index % len(COLORS)]
            xs = list(range(polygon.rank + 1))
            ys = [float(y) for y in polygon.ordinates()]
            axes.plot(xs, ys, color=color, linewidth=1.5)
            vertices = polygon.vertices()
            axes.plot(
                [v.x for v in vertices],
                [v.y for v in vertices],
                linestyle="none",
                marker="o",
                markersize=4,
                color=color,
            )
            axes.annotate(
                label,
                (vertices[-1].x, vertices[-1].y),
                xytext=(6, -4 - 12 * index),
                textcoords="offset points",
                color=color,
            )
        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
