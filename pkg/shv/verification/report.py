import time
import typing

import pydantic

from shv.logger import log


class Problem(pydantic.BaseModel):
    """
    Failed case with the parameters needed to reproduce it
    """

    case: str
    description: str
    payload: typing.Dict[str, typing.Any] = {}


class VerificationReport(pydantic.BaseModel):
    suite: str
    grid: typing.Dict[str, typing.Any] = {}
    cases: int = 0
    passed: int = 0
    problems: typing.List[Problem] = []
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.problems

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        return VerificationReport(suite=self.suite, grid=self.grid, cases=self.cases + other.cases,
                                  passed=self.passed + other.passed, problems=self.problems + other.problems,
                                  seconds=self.seconds + other.seconds)


class Recorder:
    """
    Collects case outcomes of one suite run; a failing or raising case never stops the suite
    """

    def __init__(self, suite: str, **grid: typing.Any):
        self.report = VerificationReport(suite=suite, grid=grid)
        self._started = time.monotonic()

    def check(self, case: str, condition: bool, description: str, **payload: typing.Any) -> bool:
        self.report.cases += 1
        if condition:
            self.report.passed += 1
        else:
            log.debug(f'{self.report.suite}: {case} failed: {description}')
            self.report.problems.append(Problem(case=case, description=description,
                                                payload={k: str(v) for k, v in payload.items()}))
        return condition

    def run(self, case: str, check: typing.Callable[[], typing.Tuple[bool, str]], **payload: typing.Any) -> bool:
        """
        Records check() = (passed, description); an exception counts as a failure of the case
        """
        try:
            condition, description = check()
        except Exception as exc:  # noqa: B902
            condition, description = False, f'{type(exc).__name__}: {exc}'
        return self.check(case, condition, description, **payload)

    def finish(self) -> VerificationReport:
        self.report.seconds = round(time.monotonic() - self._started, 3)
        return self.report
