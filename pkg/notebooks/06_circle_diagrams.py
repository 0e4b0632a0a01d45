# %% [markdown]
# # Circle diagrams
#
# Orbits are drawn on the unit circle with arrows x_i -> x_sigma(i).
# Fixed points of m_k are blue, orbit points red, labels are numerators
# over k^q - 1.

# %%
import tempfile
from pathlib import Path

from cyclic import parse_cycle, realize_minimal
from cyclic.diagram import orbit_svg

out = Path(tempfile.mkdtemp())
for name, text in [("five", "(1 2 4 5 3)"), ("six", "(1 2 5 6 3 4)")]:
    svg = orbit_svg(realize_minimal(parse_cycle(text)))
    (out / f"{name}.svg").write_text(svg)
    print(out / f"{name}.svg", svg.count('class="fixed"'), "fixed points")
