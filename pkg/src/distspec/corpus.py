"""Named test graphs, including the graph6 strings printed with the optimistic examples."""

from __future__ import annotations

from .graph import Graph
from .graph6 import Graph6Error, decode_graph6

VT_DIAMETER_3 = "UsaCC@u]QwLODoIo@wBI?So?{??@~??lw?h{?Bv?"
VT_DIAMETER_4 = "YsP@?__C?A?O@@AA?GOCA?C??_G?g?@O?G??@?????o_?Cc???S???g_"

# The self-complementary 17-vertex example was typeset with a doubled
# backslash. Only the single-backslash reading has the 23 body bytes a
# 17-vertex graph6 string needs; both are kept and tried in this order.
SELF_COMPLEMENTARY_17_VARIANTS = {
    "single-backslash": "P?BMP{}kmh[X\\SjCrHisfYJ[",
    "double-backslash": "P?BMP{}kmh[X\\\\SjCrHisfYJ[",
}


def load_self_complementary_17() -> tuple[str, str, Graph]:
    """Return (variant name, graph6 string, graph) for the first variant that decodes."""
    errors = []
    for name, text in SELF_COMPLEMENTARY_17_VARIANTS.items():
        try:
            return name, text, decode_graph6(text)
        except Graph6Error as exc:
            errors.append(f"{name}: {exc}")
    raise Graph6Error("no variant of the 17-vertex string decodes: " + "; ".join(errors))
