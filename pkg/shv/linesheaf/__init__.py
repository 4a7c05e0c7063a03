__all__ = [
    'Sign',
    'Interval',
    'Covector',
    'LineSummand',
    'LineSheaf',
    'merge_covectors',
    'end_covectors',
    'end_shift',
    'single_degree',
    'decompose_line',
    'marked_points',
    'assemble_line',
    'ss_line',
    'dual_line',
    'tensor_line',
    'interval_cohomology_degree',
    'cohomology_line',
    'euler_characteristic',
    'hom_criterion',
    'hom_dim_line',
    'is_compact',
    'autodual_structure',
    'restrict_line',
    'stalk_dim_line',
    'microlocal_action',
    'acts_by',
]

from .interval import Sign, Interval, Covector, merge_covectors, end_covectors, end_shift
from .linesheaf import LineSummand, LineSheaf, single_degree, decompose_line, marked_points, assemble_line, \
    ss_line, dual_line, tensor_line, interval_cohomology_degree, cohomology_line, euler_characteristic, \
    hom_criterion, hom_dim_line, is_compact, autodual_structure, restrict_line, stalk_dim_line, \
    microlocal_action, acts_by
