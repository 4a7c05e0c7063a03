__all__ = [
    'Bar',
    'Relation',
    'IntervalLike',
    'WrappedLike',
    'ZigzagRep',
    'LineQuiverRep',
    'CircleQuiverRep',
    'RepMorphism',
    'regular_part',
    'bar_multiplicities',
    'common_refinement',
    'direct_sum',
    'direct_sum_all',
    'tensor',
    'hom_basis',
    'hom_space_dim',
    'kernel',
    'image',
    'cokernel',
    'kernel_endomorphism',
    'cokernel_endomorphism',
    'is_isomorphism',
    'vertex_range',
    'range_endpoints',
    'from_interval',
    'from_circle_summand',
    'tits_form',
    'positive_roots',
]

from .zigzag import Bar, Relation, regular_part, bar_multiplicities
from .quiverrep import IntervalLike, WrappedLike, ZigzagRep, LineQuiverRep, CircleQuiverRep, RepMorphism, \
    common_refinement, direct_sum, direct_sum_all, tensor, hom_basis, hom_space_dim, kernel, image, cokernel, \
    kernel_endomorphism, cokernel_endomorphism, is_isomorphism, vertex_range, range_endpoints, from_interval, \
    from_circle_summand, tits_form, positive_roots
