import typing


class ShvError(Exception):
    """
    Base class for every domain fault raised by shv
    """


class NotInvertible(ShvError):
    """
    Square matrix without an inverse
    """


class SpectrumNotRational(ShvError):
    """
    Characteristic polynomial does not split over the rationals
    """

    def __init__(self, factor: str):
        super().__init__(f'characteristic polynomial has the irreducible factor {factor}')
        self.factor = factor


class ShapeMismatch(ShvError):
    """
    Matrix shapes do not fit the adjacent spaces
    """


class DuplicatePoint(ShvError):
    """
    Marked point given twice
    """


class EndpointNotMarked(ShvError):
    """
    Interval endpoint is not among the marked points
    """


class MixedDegrees(ShvError):
    """
    Operation needs a sheaf concentrated in a single degree
    """


class NotSimple(ShvError):
    """
    Sheaf is not simple at the requested covector
    """

    def __init__(self, covector: typing.Any, rank: int):
        super().__init__(f'microlocal rank {rank} at {covector}, expected 1')
        self.covector = covector
        self.rank = rank


class NonInvertibleAut(ShvError):
    """
    Automorphism data holds a zero scalar
    """


class InvalidCover(ShvError):
    """
    Two arcs do not form a cover with two overlap components
    """


class InconsistentModel(ShvError):
    """
    Cellular model maps do not fit its stalks
    """
