__all__ = [
    'ShvError',
    'NotInvertible',
    'SpectrumNotRational',
    'ShapeMismatch',
    'DuplicatePoint',
    'EndpointNotMarked',
    'MixedDegrees',
    'NotSimple',
    'NonInvertibleAut',
    'InvalidCover',
    'InconsistentModel',
]

from .errors import ShvError, NotInvertible, SpectrumNotRational, ShapeMismatch, DuplicatePoint, \
    EndpointNotMarked, MixedDegrees, NotSimple, NonInvertibleAut, InvalidCover, InconsistentModel
