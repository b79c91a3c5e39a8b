import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckRecord:
    # One identity evaluated on one sample
    identity: str
    sample_id: str
    residual: float = 0.0
    passed: bool = True
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = {
            'identity': self.identity,
            'sample_id': self.sample_id,
            'residual': float(self.residual),
            'pass': bool(self.passed),
        }
        if self.detail:
            data['detail'] = self.detail
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'CheckRecord':
        return cls(
            identity=data['identity'],
            sample_id=data['sample_id'],
            residual=data.get('residual', 0.0),
            passed=data.get('pass', True),
            detail=data.get('detail', {}),
        )


@dataclass
class SuiteReport:
    suite: str
    geometry: str
    chirality: str
    backend: str
    n_samples: int = 0
    checks: List[CheckRecord] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None  # set when the suite raised

    @property
    def max_residual(self) -> float:
        return max((float(c.residual) for c in self.checks), default=0.0)

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        return record

    def to_dict(self) -> dict:
        data = {
            'suite': self.suite,
            'geometry': self.geometry,
            'chirality': self.chirality,
            'backend': self.backend,
            'n_samples': self.n_samples,
            'max_residual': self.max_residual,
            'pass': self.passed,
            'checks': [c.to_dict() for c in self.checks],
            'summary': self.summary,
        }
        if self.error is not None:
            data['error'] = self.error
        return data

    def to_json(self) -> str:
        # No timestamps: identical runs give identical bytes
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> 'SuiteReport':
        return cls(
            suite=data['suite'],
            geometry=data['geometry'],
            chirality=data['chirality'],
            backend=data['backend'],
            n_samples=data.get('n_samples', 0),
            checks=[CheckRecord.from_dict(c) for c in data.get('checks', [])],
            summary=data.get('summary', {}),
            error=data.get('error'),
        )
