__all__ = [
    'Problem',
    'VerificationReport',
    'Recorder',
    'SUITES',
    'run_suites',
]

from .report import Problem, VerificationReport, Recorder
from .suites import SUITES, run_suites
