from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Any

from django_convexmeans.conf import get_figure_colors
from django_convexmeans.exceptions import DomainError
from django_convexmeans.geometry.means import means_chain
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import scale
from django_convexmeans.golden.families import hexagon_family_member
from django_convexmeans.golden.house import golden_house
from django_convexmeans.optimize.containment import minkowski_asymmetry

logger = logging.getLogger(__name__)

MARGIN = 0.05

# Drawing units per unit of the plane
UNIT = 100.0

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width).3f" height="%(height).3f" \
viewBox="%(min_x).3f %(min_y).3f %(width).3f %(height).3f" \
version="1.1" xmlns="http://www.w3.org/2000/svg">
"""

POSTAMBLE = "</svg>\n"

FIGURE_NAMES = ("gh", "gh-symm", "family")


@dataclass(frozen=True)
class Layer:
    """A polygon outline; points are float plane coordinates."""

    points: tuple[tuple[float, float], ...]
    stroke: str
    label: str


@dataclass(frozen=True)
class DashedLine:
    start: tuple[float, float]
    end: tuple[float, float]
    stroke: str


@dataclass
class FigureSpec:
    """Layers drawn in order over a viewport with a 5% margin."""

    title: str
    layers: list[Layer] = dataclass_field(default_factory=list)
    annotations: list[DashedLine] = dataclass_field(default_factory=list)

    def add_polygon(self, P: ConvexPolygon, stroke: str, label: str) -> None:
        self.layers.append(
            Layer(tuple(v.to_float() for v in P.vertices), stroke, label)
        )

    def add_dashed(
        self,
        start: tuple[float, float],
        end: tuple[float, float],
        stroke: str,
    ) -> None:
        self.annotations.append(DashedLine(start, end, stroke))

    def bounds(self) -> tuple[float, float, float, float]:
        """(min_x, min_y, max_x, max_y) over all layers and annotations."""
        points = [p for layer in self.layers for p in layer.points]
        for line in self.annotations:
            points += [line.start, line.end]
        if not points:
            raise DomainError("Figure has nothing to draw", "figure", self)
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        return min(xs), min(ys), max(xs), max(ys)

    def viewport(self) -> tuple[float, float, float, float]:
        """Bounds grown by ``MARGIN`` of the larger extent on every side."""
        min_x, min_y, max_x, max_y = self.bounds()
        pad = max(max_x - min_x, max_y - min_y) * MARGIN
        return min_x - pad, min_y - pad, max_x + pad, max_y + pad


def _svg_point(x: float, y: float) -> str:
    # SVG y axis points down
    return "%.6f,%.6f" % (x * UNIT, -y * UNIT)


def render_svg(spec: FigureSpec) -> str:
    """Render a figure to an SVG 1.1 document."""
    min_x, min_y, max_x, max_y = spec.viewport()
    width = (max_x - min_x) * UNIT
    height = (max_y - min_y) * UNIT
    parts = [
        PREAMBLE
        % {
            "width": width,
            "height": height,
            "min_x": min_x * UNIT,
            "min_y": -max_y * UNIT,
        },
        "<title>%s</title>\n" % spec.title,
    ]
    for layer in spec.layers:
        parts.append(
            '<polygon points="%s" style="fill:none;stroke:%s;'
            'stroke-width:1.5"><title>%s</title></polygon>\n'
            % (
                " ".join(_svg_point(x, y) for x, y in layer.points),
                layer.stroke,
                layer.label,
            )
        )
    for line in spec.annotations:
        parts.append(
            '<polyline points="%s %s" style="fill:none;stroke:%s;'
            'stroke-width:1;stroke-dasharray:6,4" />\n'
            % (_svg_point(*line.start), _svg_point(*line.end), line.stroke)
        )
    parts.append(POSTAMBLE)
    return "".join(parts)


def golden_house_figure(colors: dict[str, str] | None = None) -> FigureSpec:
    """The golden house, its dilate -phi GH and the supports x = +-1."""
    colors = colors or get_figure_colors()
    house = golden_house()
    s = minkowski_asymmetry(house).s
    dilate = scale(negate(house), s)
    spec = FigureSpec(title="Golden house and its negative dilate")
    spec.add_polygon(house, colors["body"], "GH")
    spec.add_polygon(dilate, colors["dilate"], "-phi*GH")
    _, low, _, high = spec.bounds()
    for x in (-1.0, 1.0):
        spec.add_dashed((x, low), (x, high), colors["support"])
    return spec


def golden_house_means_figure(
    colors: dict[str, str] | None = None,
) -> FigureSpec:
    """The four symmetrizations of the golden house."""
    colors = colors or get_figure_colors()
    spec = FigureSpec(title="Golden house and its symmetrizations")
    for name, body in means_chain(golden_house()).layers():
        spec.add_polygon(body, colors[name], name)
    return spec


def family_figure(
    tau: Any,
    colors: dict[str, str] | None = None,
) -> FigureSpec:
    """A re-centered hexagon of the family with its -s C overlay."""
    colors = colors or get_figure_colors()
    member = hexagon_family_member(tau)
    spec = FigureSpec(title=f"Hexagon family at tau={tau}")
    spec.add_polygon(member.polygon, colors["body"], "C")
    spec.add_polygon(
        scale(negate(member.polygon), member.s), colors["dilate"], "-s*C"
    )
    return spec


def build_figure(name: str, tau: Any = None) -> FigureSpec:
    """
    Raises:
        DomainError: For an unknown figure name or a missing tau
    """
    if name == "gh":
        return golden_house_figure()
    if name == "gh-symm":
        return golden_house_means_figure()
    if name == "family":
        if tau is None:
            raise DomainError("The family figure needs tau", "tau", tau)
        return family_figure(tau)
    raise DomainError(
        f"Unknown figure {name!r}; expected one of {', '.join(FIGURE_NAMES)}",
        name="name",
        value=name,
    )


def write_figure(spec: FigureSpec, path: str) -> None:
    """Write a figure; OSError propagates for unwritable paths."""
    document = render_svg(spec)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(document)
    logger.info("Figure %r written to %s", spec.title, path)
