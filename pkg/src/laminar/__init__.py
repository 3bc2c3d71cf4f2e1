"""Persistently laminar tangles: diagrams, invariants, branched surfaces and certificates."""

__version__ = "0.1.0"

from .diagram import (  # noqa: E402
    DiagramError,
    PlanarDiagram,
    canonical,
    component_count,
    denominator_closure,
    is_alternating,
    is_knot,
    mirror,
    numerator_closure,
    rotate90,
    tangle_sum,
    validate,
)
from .rational import RationalTangle, continued_fraction, rational_to_diagram  # noqa: E402
from .notation import evaluate, parse_tangle  # noqa: E402
from .invariants import determinant, jones, kauffman_bracket, torus2k_reference, writhe  # noqa: E402
from .branched import (  # noqa: E402
    BranchedSurface,
    admits_contact_surface,
    branch_equations,
    carries_closed_surface,
    is_transversely_orientable,
    solve_nonnegative,
)
from .family import (  # noqa: E402
    ConnectionPattern,
    FamilySpec,
    build_family_surface,
    certify,
    close_with_pattern,
    family_tangle_template,
    find_completion_to,
    torus_witness,
)
