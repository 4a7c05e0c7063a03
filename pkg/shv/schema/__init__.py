__all__ = [
    'NEG_INF',
    'POS_INF',
    'Model',
    'LineSummandModel',
    'LineSheafModel',
    'WrappedModel',
    'LocalModel',
    'CircleSheafModel',
    'SpacesModel',
    'RepModel',
    'CovectorModel',
    'ArcModel',
    'CoverModel',
    'AutModel',
    'PathStepModel',
    'parse_sheaf',
    'dump_sheaf',
]

from .schema import NEG_INF, POS_INF, Model, LineSummandModel, LineSheafModel, WrappedModel, LocalModel, \
    CircleSheafModel, SpacesModel, RepModel, CovectorModel, ArcModel, CoverModel, AutModel, PathStepModel, \
    parse_sheaf, dump_sheaf
