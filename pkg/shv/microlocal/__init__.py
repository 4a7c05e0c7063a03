__all__ = [
    'Sheaf',
    'Owner',
    'MicrolocalRank',
    'EndoElement',
    'owners',
    'sole_owner',
    'microlocal_rank',
    'is_simple_at',
    'is_pure_at',
    'shift_difference',
    'sheaf_points',
    'summand_reps',
    'assembled',
    'mu_scalar',
    'localize',
    'end_basis',
    'f_linked_exact',
    'f_linked_interval_criterion',
    'conjugate_point',
    'h_invariant',
    'h_invariants',
    'morph_elem_witness',
    'Arc',
    'CoverSpec',
    'AutSpec',
    'PathStep',
    'component_sheaves',
    'identity_aut',
    'scalar_aut',
    'mv_twist',
    'twist_restrictions_agree',
    'm_gamma',
    'cech_class',
]

from .microlocal import Sheaf, Owner, MicrolocalRank, EndoElement, owners, sole_owner, microlocal_rank, \
    is_simple_at, is_pure_at, shift_difference, sheaf_points, summand_reps, assembled, mu_scalar, localize, \
    end_basis, f_linked_exact, f_linked_interval_criterion, conjugate_point, h_invariant, h_invariants, \
    morph_elem_witness
from .twist import Arc, CoverSpec, AutSpec, PathStep, component_sheaves, identity_aut, scalar_aut, mv_twist, \
    twist_restrictions_agree, m_gamma, cech_class
