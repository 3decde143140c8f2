"""partsat: clique saturation in multipartite graphs.

Library layout:

* :mod:`partsat.graph` -- the k-partite graph model, saturation predicates,
  closure, transversal and neighbourhood diagnostics.
* :mod:`partsat.constructions` -- generators for every explicit witness
  family, each certified by the core verifiers.
* :mod:`partsat.search` -- exhaustive isomorph-free searches for exact small
  values and the bounded upper-bound search.
* :mod:`partsat.families` -- intersecting set families and the common-vertex
  check for maximum cliques.
* :mod:`partsat.bounds` -- the closed-form lower/upper/exact bound calculator.
* :mod:`partsat.serialize` -- bit-exact graph JSON and DOT export.
* :mod:`partsat.cli` -- the ``partsat`` command-line tool.
"""

from .errors import (InputError, PartsatError, ResourceExhaustedError,
                     UnsupportedParametersError, WitnessError)
from .graph import (PartiteGraph, SpecialDegreeReport, Transversal,
                    beta_violation, clique_number, edges_between, has_clique,
                    is_admissible_nonedge, is_partite_saturated,
                    neighborhood_restriction, nonedge_is_saturated,
                    plain_graph, saturation_closure, saturation_violation,
                    special_degrees, verify_alpha_witness, verify_beta_witness)

__version__ = "0.1.0"

__all__ = [
    "InputError", "PartsatError", "ResourceExhaustedError",
    "UnsupportedParametersError", "WitnessError",
    "PartiteGraph", "SpecialDegreeReport", "Transversal",
    "beta_violation", "clique_number", "edges_between", "has_clique",
    "is_admissible_nonedge", "is_partite_saturated",
    "neighborhood_restriction", "nonedge_is_saturated", "plain_graph",
    "saturation_closure", "saturation_violation", "special_degrees",
    "verify_alpha_witness", "verify_beta_witness",
    "__version__",
]
