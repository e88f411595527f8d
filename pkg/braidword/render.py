"""SVG figures of paths and g-bases in the punctured disk."""

from typing import Optional, Sequence

from .errors import PathValidationError
from .paths import ABOVE, BELOW, Link, PathList, link_turns, validate_path

SPACING = 60
MARGIN = 40
OFFSET = 14
SIDE = 10
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2")


def _waypoints(path: PathList, lane: int, height: int, width: int) -> list[tuple[float, float]]:
    axis = height / 2
    dy = OFFSET + 3 * lane
    turns = link_turns(path.links)
    points: list[tuple[float, float]] = []
    previous: Optional[Link] = None
    for idx, link in enumerate(path.links):
        if link.is_base:
            points.append((width / 2, height - MARGIN / 2))
            previous = link
            continue
        x = MARGIN + SPACING * link.point
        if previous is not None and previous.point == link.point and previous.position != link.position:
            # going around the puncture: pass it on the side given by the winding sense
            turn = turns[idx - 1]
            if turn is not None:
                from_above = previous.position == ABOVE
                points.append((x - SIDE * turn * (1 if from_above else -1), axis))
        if link.position == ABOVE:
            points.append((x, axis - dy))
        elif link.position == BELOW:
            points.append((x, axis + dy))
        else:
            points.append((x, axis))
        previous = link
    return points


def render_svg(paths: Sequence[PathList], n: int) -> str:
    """
    Draw `paths` over n punctures: punctures as labelled dots on a horizontal
    axis, the base point at the bottom center, one polyline per path and a
    circle around every terminal puncture.
    """
    for path in paths:
        violations = validate_path(path)
        if violations:
            raise PathValidationError(violations)

    width = 2 * MARGIN + SPACING * (n + 1)
    height = 2 * MARGIN + 4 * (OFFSET + 3 * max(len(paths), 1))
    axis = height / 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}"'
        f' width="{width}px" height="{height}px">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for lane, path in enumerate(paths):
        color = COLORS[lane % len(COLORS)]
        coords = " ".join(f"{x:g},{y:g}" for x, y in _waypoints(path, lane, height, width))
        parts.append(f'<polyline points="{coords}" stroke="{color}" fill="none" stroke-width="2"/>')
        terminal_x = MARGIN + SPACING * path.terminal
        parts.append(
            f'<circle cx="{terminal_x}" cy="{axis:g}" r="{7 + 2 * lane}"'
            f' stroke="{color}" fill="none" stroke-width="1.5"/>'
        )
    for k in range(1, n + 1):
        x = MARGIN + SPACING * k
        parts.append(f'<circle cx="{x}" cy="{axis:g}" r="3" fill="black"/>')
        parts.append(f'<text x="{x + 5}" y="{axis - 5:g}" font-family="monospace" font-size="10">{k}</text>')
    base_x, base_y = width / 2, height - MARGIN / 2
    parts.append(f'<circle cx="{base_x:g}" cy="{base_y:g}" r="3" fill="gray"/>')
    parts.append(f'<text x="{base_x + 5:g}" y="{base_y + 4:g}" font-family="monospace" font-size="10">u</text>')
    parts.append("</svg>")
    return "\n".join(parts)
