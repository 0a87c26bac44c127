"""Coxeter and affine Weyl group invariant theory at desk scale.

The package builds root-system data, finite and affine reflection groups,
their hyperplane arrangements and invariant generator systems, assembles
orbit-separating maps, and numerically certifies the transnormal-map
conditions and pullback invariance of forms in the generator basis.

Density of the trigonometric invariant algebra in the sup-norm is an
analytic fact with no finite test; orbit separation (see `separator` and
`oracle`) is the operational surrogate checked here.  Likewise, freeness of
the generator systems is certified only through the Jacobian rank check.
"""

from .root_systems import (
    RootSystem,
    build_root_system,
    coroot_of,
    fundamental_weights,
    lattices,
)
from .reflection_groups import (
    AffineWeylGroup,
    FiniteCoxeterGroup,
    Isometry,
    ProductGroup,
    decompose,
    enumerate_elements,
    fold_to_alcove,
    fold_to_chamber,
    orbit_equal,
    reflection_in,
)
from .arrangements import (
    Arrangement,
    Hyperplane,
    arrangement_of,
    chamber_of,
    count_chambers,
    is_invariant,
)
from .invariants import (
    GeneratorSystem,
    Polynomial,
    TrigInvariant,
    averaging_operator,
    chevalley_generators,
    real_generators,
    reynolds,
    weight_involution,
)
from .separator import (
    SeparatingMap,
    build_separating_map,
    check_invariance,
    check_separation,
)
from .transnormal import (
    check_transnormal,
    gradient,
    gram_matrix,
    regular_rank,
)
from .forms import InvariantForm, build_form, jacobian_form, pullback_deviation
from .oracle import bounded_affine_orbit, finite_orbit, oracle_separation_audit

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
