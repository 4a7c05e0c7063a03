__all__ = [
    'WrappedInterval',
    'JordanBlock',
    'WrappedSummand',
    'LocalSummand',
    'CircleSheaf',
    'monodromy',
    'decompose_circle',
    'circle_points',
    'local_system_rep',
    'assemble_circle',
    'pullback_window',
    'tensor_circle',
    'dual_circle',
    'cohomology_circle',
    'end_algebra',
    'ss_circle',
    'circle_hom_dim',
    'stalk_dim_circle',
]

from .circlesheaf import WrappedInterval, JordanBlock, WrappedSummand, LocalSummand, CircleSheaf, monodromy, \
    decompose_circle, circle_points, local_system_rep, assemble_circle, pullback_window, tensor_circle, \
    dual_circle, cohomology_circle, end_algebra, ss_circle, circle_hom_dim, stalk_dim_circle
