"""Exact computation in finitely generated Coxeter groups: root systems,
small roots and their reduced-word automata, weak-order lattice operations,
low elements, Garside shadows, and maximal dihedral subsystem probes.

All arithmetic happens in the real cyclotomic field Q(2*cos(pi/N)); nothing
is ever decided on floating point values.
"""

from .scalar import AlgebraicScalar, FieldSpec, make_field, parse_scalar
from .system import CoxeterSystem, build_system, preset, system_from_json
from .roots import Element, IDENTITY, Root, RootSystem, parse_root
from .depth import (
    Coideal,
    coideal_depth,
    coideal_length,
    dominance_depth,
    dominance_depth_vec,
    dominance_set,
    dominates,
)
from .automaton import ReducedWordAutomaton, get_automaton, small_inversion_set, small_roots
from .order import (
    ConeRealization,
    ConeTester,
    JoinOutcome,
    chain_labels,
    cone_member,
    join,
    meet,
    realize_cone,
    root_bruhat_steps,
    root_weak_covers,
)
from .garside import (
    GarsideCheck,
    LowReport,
    ShadowReport,
    garside_closure,
    is_low,
    low_elements,
    verify_garside,
)
from .dihedral import (
    CapExceeded,
    DihedralSubsystem,
    check_balanced,
    check_bipodal,
    check_heart,
    companion_simple,
    local_reflection_length,
    monotonicity_probe,
    plane_subsystem,
    planes_containing,
    positive_chain,
    segment,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
