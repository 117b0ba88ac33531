# shenlarsson/reports.py

from dataclasses import dataclass, field

from .linalg import format_scalar

MAX_COUNTEREXAMPLES = 20

FULL = 'FULL'
PROPER = 'PROPER'
INCONCLUSIVE = 'INCONCLUSIVE'


def to_jsonable(value):
    """Recursively turn exact values into JSON-ready data (rationals become "p/q" strings)."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return format_scalar(value)
    raise TypeError(f'cannot serialize {type(value).__name__}')


@dataclass
class Report:
    check: str
    params: dict = field(default_factory=dict)
    samples: int = 0
    passes: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    verdict: str = None
    notes: list = field(default_factory=list)

    def record(self, passed, counterexample=None):
        self.samples += 1
        if passed:
            self.passes += 1
            return
        self.failure_count += 1
        if len(self.failures) < MAX_COUNTEREXAMPLES:
            self.failures.append(counterexample if counterexample is not None else {})

    def skip(self, reason):
        self.details.setdefault('skipped', []).append(reason)

    def absorb(self, other, prefix=None):
        """Fold the counts and failures of a sub-report into this one."""
        self.samples += other.samples
        self.passes += other.passes
        self.failure_count += other.failure_count
        for failure in other.failures:
            if len(self.failures) >= MAX_COUNTEREXAMPLES:
                break
            self.failures.append({'check': prefix or other.check, **failure})
        self.details.setdefault('parts', []).append(other.summary())

    @property
    def ok(self):
        if self.failure_count:
            return False
        if self.verdict is not None:
            return self.verdict in (FULL, PROPER)
        return True

    def summary(self):
        status = self.verdict or ('PASS' if self.ok else 'FAIL')
        return f'{self.check}: {status} ({self.passes}/{self.samples} passed)'

    def to_dict(self):
        data = {
            'check': self.check,
            'params': self.params,
            'samples': self.samples,
            'passes': self.passes,
            'failure_count': self.failure_count,
            'failures': self.failures,
            'ok': self.ok,
        }
        if self.details:
            data['details'] = self.details
        if self.verdict is not None:
            data['verdict'] = self.verdict
        if self.notes:
            data['notes'] = self.notes
        return to_jsonable(data)
