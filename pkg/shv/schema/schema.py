import typing

import pydantic

from shv.circlesheaf import CircleSheaf, JordanBlock, LocalSummand, WrappedInterval, WrappedSummand
from shv.exactalg import Matrix, Rational, format_rational, parse_rational
from shv.linesheaf import Covector, Interval, LineSheaf, LineSummand, Sign
from shv.microlocal import Arc, AutSpec, CoverSpec, PathStep
from shv.quiverrep import CircleQuiverRep, LineQuiverRep, ZigzagRep

NEG_INF = '-inf'
POS_INF = '+inf'


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value


def _end(value: str, infinite: str) -> typing.Optional[Rational]:
    return None if value == infinite else parse_rational(value)


class Model(pydantic.BaseModel):
    """
    Base for the JSON documents exchanged by the command line
    """

    class Config:
        allow_population_by_field_name = True
        extra = pydantic.Extra.forbid


class LineSummandModel(Model):
    lo: str = NEG_INF
    lo_closed: bool = False
    hi: str = POS_INF
    hi_closed: bool = False
    deg: int = 0
    mult: int = pydantic.Field(1, ge=1)

    @pydantic.validator('lo')
    def lo_is_rational(cls, value: str) -> str:  # noqa: N805
        return value if value == NEG_INF else _check_rational(value)

    @pydantic.validator('hi')
    def hi_is_rational(cls, value: str) -> str:  # noqa: N805
        return value if value == POS_INF else _check_rational(value)

    def to_domain(self) -> LineSummand:
        interval = Interval(_end(self.lo, NEG_INF), _end(self.hi, POS_INF), self.lo_closed, self.hi_closed)
        return LineSummand(interval, self.deg, self.mult)

    @classmethod
    def from_domain(cls, summand: LineSummand) -> 'LineSummandModel':
        i = summand.interval
        return cls(lo=NEG_INF if i.lo is None else format_rational(i.lo), lo_closed=i.lo_closed,
                   hi=POS_INF if i.hi is None else format_rational(i.hi), hi_closed=i.hi_closed,
                   deg=summand.degree, mult=summand.mult)


class LineSheafModel(Model):
    summands: typing.List[LineSummandModel] = []

    def to_domain(self) -> LineSheaf:
        return LineSheaf(tuple(s.to_domain() for s in self.summands))

    @classmethod
    def from_domain(cls, sheaf: LineSheaf) -> 'LineSheafModel':
        return cls(summands=[LineSummandModel.from_domain(s) for s in sheaf.summands])


class WrappedModel(Model):
    lo: str
    length: str = pydantic.Field(..., alias='len')
    lo_closed: bool = True
    hi_closed: bool = True
    deg: int = 0
    mult: int = pydantic.Field(1, ge=1)

    _rational = pydantic.validator('lo', 'length', allow_reuse=True)(_check_rational)

    def to_domain(self) -> WrappedSummand:
        lo = parse_rational(self.lo)
        interval = Interval(lo, lo + parse_rational(self.length), self.lo_closed, self.hi_closed)
        return WrappedSummand(WrappedInterval.from_lift(interval), self.deg, self.mult)

    @classmethod
    def from_domain(cls, summand: WrappedSummand) -> 'WrappedModel':
        w = summand.interval
        return cls(lo=format_rational(w.lift_lo), length=format_rational(w.length), lo_closed=w.lo_closed,
                   hi_closed=w.hi_closed, deg=summand.degree, mult=summand.mult)


class LocalModel(Model):
    alpha: str
    r: int = pydantic.Field(1, ge=1)
    deg: int = 0
    mult: int = pydantic.Field(1, ge=1)

    @pydantic.validator('alpha')
    def alpha_is_unit(cls, value: str) -> str:  # noqa: N805
        if parse_rational(value) == 0:
            raise ValueError('local system eigenvalue must be non-zero')
        return value

    def to_domain(self) -> LocalSummand:
        return LocalSummand(JordanBlock(parse_rational(self.alpha), self.r), self.deg, self.mult)

    @classmethod
    def from_domain(cls, summand: LocalSummand) -> 'LocalModel':
        return cls(alpha=format_rational(summand.block.alpha), r=summand.block.r, deg=summand.degree,
                   mult=summand.mult)


class CircleSheafModel(Model):
    wrapped: typing.List[WrappedModel] = []
    local: typing.List[LocalModel] = []

    def to_domain(self) -> CircleSheaf:
        return CircleSheaf(tuple(w.to_domain() for w in self.wrapped), tuple(loc.to_domain() for loc in self.local))

    @classmethod
    def from_domain(cls, sheaf: CircleSheaf) -> 'CircleSheafModel':
        return cls(wrapped=[WrappedModel.from_domain(w) for w in sheaf.wrapped],
                   local=[LocalModel.from_domain(loc) for loc in sheaf.local])


class SpacesModel(Model):
    stalks: typing.List[pydantic.NonNegativeInt]
    arcs: typing.List[pydantic.NonNegativeInt]


class RepModel(Model):
    """
    Quiver representation; arrows are listed left_0, right_0, left_1, right_1, ... as nested rows of "p/q"
    """

    kind: typing.Literal['line', 'circle'] = 'line'
    points: typing.List[str]
    spaces: SpacesModel
    arrows: typing.List[typing.List[typing.List[str]]]

    _points = pydantic.validator('points', each_item=True, allow_reuse=True)(_check_rational)

    @pydantic.validator('arrows', each_item=True)
    def entries_are_rational(cls, rows: typing.List[typing.List[str]]) -> typing.List[typing.List[str]]:  # noqa
        for row in rows:
            for entry in row:
                _check_rational(entry)
        return rows

    def to_domain(self) -> ZigzagRep:
        points = tuple(parse_rational(p) for p in self.points)
        stalks, arcs = tuple(self.spaces.stalks), tuple(self.spaces.arcs)
        n = len(points)
        if len(self.arrows) != 2 * n:
            raise ValueError(f'{len(self.arrows)} arrows given for {n} points, expected {2 * n}')
        if self.kind == 'line':
            targets = [arcs[i + side] if i + side < len(arcs) else 0 for i in range(n) for side in (0, 1)]
        else:
            targets = [arcs[(i - 1 + side) % len(arcs)] if arcs else 0 for i in range(n) for side in (0, 1)]
        matrices = [_matrix(rows, targets[k], stalks[k // 2] if k // 2 < len(stalks) else 0)
                    for k, rows in enumerate(self.arrows)]
        rep_type = LineQuiverRep if self.kind == 'line' else CircleQuiverRep
        return rep_type(points, stalks, arcs, tuple(matrices[0::2]), tuple(matrices[1::2]))

    @classmethod
    def from_domain(cls, rep: ZigzagRep) -> 'RepModel':
        assert isinstance(rep, (LineQuiverRep, CircleQuiverRep))
        return cls(kind='line' if isinstance(rep, LineQuiverRep) else 'circle',
                   points=[format_rational(p) for p in rep.points],
                   spaces=SpacesModel(stalks=list(rep.stalks), arcs=list(rep.arcs)),
                   arrows=[[[format_rational(x) for x in f.row(i)] for i in range(f.rows)] for _, _, f in rep.arrows])


def _matrix(rows: typing.List[typing.List[str]], height: int, width: int) -> Matrix:
    if height * width == 0:
        return Matrix.zeros(height, width)
    if len(rows) != height or any(len(row) != width for row in rows):
        raise ValueError(f'arrow matrix must be {height}x{width}')
    return Matrix.from_rows([[parse_rational(x) for x in row] for row in rows])


class CovectorModel(Model):
    base: str
    sign: Sign
    deg: int = 0
    mult: int = pydantic.Field(1, ge=1)

    _base = pydantic.validator('base', allow_reuse=True)(_check_rational)

    def to_domain(self) -> Covector:
        return Covector(parse_rational(self.base), self.sign, self.deg, self.mult)

    @classmethod
    def from_domain(cls, covector: Covector) -> 'CovectorModel':
        return cls(base=format_rational(covector.base), sign=covector.sign, deg=covector.degree,
                   mult=covector.mult)


class ArcModel(Model):
    lo: str
    hi: str

    _ends = pydantic.validator('lo', 'hi', allow_reuse=True)(_check_rational)


class CoverModel(Model):
    u: ArcModel
    v: ArcModel

    def to_domain(self) -> CoverSpec:
        return CoverSpec(Arc(parse_rational(self.u.lo), parse_rational(self.u.hi)),
                         Arc(parse_rational(self.v.lo), parse_rational(self.v.hi)))


class AutModel(Model):
    scalars: typing.List[typing.List[str]] = pydantic.Field(..., min_items=2, max_items=2)

    @pydantic.validator('scalars', each_item=True)
    def scalars_are_rational(cls, component: typing.List[str]) -> typing.List[str]:  # noqa: N805
        for value in component:
            _check_rational(value)
        return component

    def to_domain(self) -> AutSpec:
        first, second = ([parse_rational(a) for a in c] for c in self.scalars)
        return AutSpec((tuple(first), tuple(second)))

    @classmethod
    def from_domain(cls, aut: AutSpec) -> 'AutModel':
        return cls(scalars=[[format_rational(a) for a in c] for c in aut.scalars])


class PathStepModel(Model):
    component: int = pydantic.Field(..., ge=0, le=1)
    sign: int = 1
    summand: int = pydantic.Field(0, ge=0)

    @pydantic.validator('sign')
    def sign_is_unit(cls, value: int) -> int:  # noqa: N805
        if value not in (1, -1):
            raise ValueError('sign must be 1 or -1')
        return value

    def to_domain(self) -> PathStep:
        return PathStep(self.component, self.sign, self.summand)


def parse_sheaf(data: typing.Any) -> typing.Union[LineSheaf, CircleSheaf]:
    """
    LineSheaf for documents with "summands", CircleSheaf for "wrapped"/"local"
    """
    if isinstance(data, dict) and ('wrapped' in data or 'local' in data):
        return CircleSheafModel.parse_obj(data).to_domain()
    return LineSheafModel.parse_obj(data).to_domain()


def dump_sheaf(sheaf: typing.Union[LineSheaf, CircleSheaf]) -> typing.Dict[str, typing.Any]:
    if isinstance(sheaf, LineSheaf):
        return LineSheafModel.from_domain(sheaf).dict(by_alias=True)
    return CircleSheafModel.from_domain(sheaf).dict(by_alias=True)
