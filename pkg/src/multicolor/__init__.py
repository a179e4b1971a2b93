"""List multicoloring of weighted graphs.

Each vertex of a graph carries a list of admissible colors and a demand:
how many distinct colors it must receive.  Adjacent vertices must receive
disjoint color sets.  This package decides which demand vectors are
satisfiable, builds and enumerates the colorings, computes the weighted
chromatic number under a uniform palette, finds the best partial service
for unsatisfiable demands, and extends existing colorings to larger
demands without recoloring.  A deliberately naive brute-force oracle
backs every solver for cross-checking.
"""

from .chromatic import ChromaticResult, independence_number, weighted_chromatic
from .coloring import (
    Coloring,
    ValidationResult,
    build_max_coloring,
    decompose,
    enumerate_colorings,
    enumerate_subcolorings,
    find_coloring,
    is_valid_coloring,
    iter_colorings,
    shrink,
    weight_of,
)
from .errors import (
    InstanceFormatError,
    NotPermissibleError,
    ResourceLimitExceeded,
    UnknownColorError,
)
from .extension import (
    ExtensionResult,
    delta_set,
    exact_nonrecolor_chi,
    extend_coloring,
    wmax_constrained,
)
from .instance import (
    Graph,
    Instance,
    all_colors,
    color_subgraph,
    load_instance,
    parse_dimacs,
    parse_instance,
    serialize_instance,
    uniform_lists,
)
from .mis import enumerate_mis, is_maximal_independent, restrict_to_subgraph
from .oncall import oncall_solutions
from .oracle import (
    brute_all_colorings,
    brute_chromatic,
    brute_colorable,
    brute_oncall,
)
from .vectors import (
    Vec,
    in_hyperrectangle,
    indicator,
    leq,
    norm,
    vec_min,
    vectorial_sum,
)
from .wmax import WmaxSet, is_permissible, prune_dominated, wmax, wmax_uniform

__version__ = "0.1.0"

__all__ = [
    "ChromaticResult",
    "Coloring",
    "ExtensionResult",
    "Graph",
    "Instance",
    "InstanceFormatError",
    "NotPermissibleError",
    "ResourceLimitExceeded",
    "UnknownColorError",
    "ValidationResult",
    "Vec",
    "WmaxSet",
    "all_colors",
    "brute_all_colorings",
    "brute_chromatic",
    "brute_colorable",
    "brute_oncall",
    "build_max_coloring",
    "color_subgraph",
    "decompose",
    "delta_set",
    "enumerate_colorings",
    "enumerate_mis",
    "enumerate_subcolorings",
    "exact_nonrecolor_chi",
    "extend_coloring",
    "find_coloring",
    "in_hyperrectangle",
    "independence_number",
    "indicator",
    "is_maximal_independent",
    "is_permissible",
    "is_valid_coloring",
    "iter_colorings",
    "leq",
    "load_instance",
    "norm",
    "oncall_solutions",
    "parse_dimacs",
    "parse_instance",
    "prune_dominated",
    "restrict_to_subgraph",
    "serialize_instance",
    "shrink",
    "uniform_lists",
    "vec_min",
    "vectorial_sum",
    "weight_of",
    "weighted_chromatic",
    "wmax",
    "wmax_constrained",
    "wmax_uniform",
]
