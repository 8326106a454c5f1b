import math
import re

import numpy as np
import pytest

from cheeger_lab.geom import disk, rectangle, square, stadium, to_polyline
from cheeger_lab.svg import body_path, render_svg


def _arc_center(x1, y1, x2, y2, r, large, sweep):
    """Center of an SVG arc (endpoint to center conversion, rx = ry, no rotation)."""
    mx, my = (x1 - x2) / 2, (y1 - y2) / 2
    d2 = mx * mx + my * my
    coef = math.sqrt(max(r * r / d2 - 1.0, 0.0))
    if large == sweep:
        coef = -coef
    cx_, cy_ = coef * my, -coef * mx
    return cx_ + (x1 + x2) / 2, cy_ + (y1 + y2) / 2


def _trace(path):
    """Sample points along an ``M/L/A/Z`` path in math coordinates."""
    tokens = re.findall(r"[MLAZ]|-?[\d.]+(?:e-?\d+)?", path)
    pts, cur, i = [], None, 0
    while i < len(tokens):
        cmd = tokens[i]
        if cmd in "ML":
            cur = (float(tokens[i + 1]), float(tokens[i + 2]))
            pts.append(cur)
            i += 3
        elif cmd == "A":
            r = float(tokens[i + 1])
            large, sweep = int(tokens[i + 4]), int(tokens[i + 5])
            end = (float(tokens[i + 6]), float(tokens[i + 7]))
            cx, cy = _arc_center(*cur, *end, r, large, sweep)
            a0 = math.atan2(cur[1] - cy, cur[0] - cx)
            a1 = math.atan2(end[1] - cy, end[0] - cx)
            # sweep-flag 1 means increasing angle in SVG coordinates
            da = (a1 - a0) % (2 * math.pi) if sweep else -((a0 - a1) % (2 * math.pi))
            for s in np.linspace(0, 1, 33)[1:]:
                pts.append((cx + r * math.cos(a0 + s * da), cy + r * math.sin(a0 + s * da)))
            cur = end
            i += 8
        else:
            i += 1
    return np.array([(x, -y) for x, y in pts])


def _area(p):
    x, y = p[:, 0], p[:, 1]
    return 0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)


@pytest.mark.parametrize("b", [square(1.0, 0.3), stadium(1.0, 0.5), disk(1.0), rectangle(2, 1)])
def test_path_traces_the_body(b):
    pts = _trace(body_path(b))
    # the drawn outline is counterclockwise and encloses the body's area
    assert math.isclose(_area(pts), b.area, rel_tol=2e-3)
    ref = to_polyline(b, 1e-6)
    d = np.min(np.linalg.norm(pts[:, None, :] - ref[None, :, :], axis=2), axis=1)
    assert np.max(d) < 1e-2 * b.diameter


def test_polygon_path_has_no_arcs():
    assert "A" not in body_path(square(1.0))


def test_full_disk_split_in_two_arcs():
    assert body_path(disk(1.0)).count("A ") == 2


def test_render_document():
    svg = render_svg(rectangle(2, 1), with_cheeger=True)
    assert svg.count("<path") == 3
    assert 'viewBox="-0.2 -1.2 2.4 1.4"' in svg
    assert render_svg(rectangle(2, 1)) == render_svg(rectangle(2, 1))


def test_contact_for_body_equal_to_cheeger_set():
    svg = render_svg(stadium(1.0, 0.5), with_cheeger=True)
    contact = re.search(r'id="contact" d="([^"]+)"', svg).group(1)
    assert contact == body_path(stadium(1.0, 0.5))
