"""Write SVG drawings of a few bodies with their Cheeger sets.

The contact between the Cheeger set and the body is drawn in red.  Output
goes to the directory given on the command line (default: demo_output).
"""

import pathlib
import sys

from cheeger_lab import rectangle, render_svg, square, stadium, triangle
from cheeger_lab.verify import quadrilateral_q

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

bodies = {
    "square": square(1.0),
    "rectangle": rectangle(2.0, 1.0),
    "rounded_square": square(1.0, 0.3),
    "right_triangle": triangle((0, 0), (1, 0), (0, 1)),
    "quadrilateral_q": quadrilateral_q(),
    "stadium": stadium(1.0, 0.5),
}
for name, b in bodies.items():
    path = out / f"{name}.svg"
    path.write_text(render_svg(b, with_cheeger=True))
    print("wrote", path)
