import logging
import re
from abc import ABC, abstractmethod
from datetime import datetime
from typing import Any, Dict, Iterable, Sequence

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.geometry import Geometry
from cswzw.models.report import CheckRecord, SuiteReport
from cswzw.models.scenario import ScenarioConfig
from cswzw.services.sampling import FormSampler, RegionSampler, suite_rng
from cswzw.services.serialization import form_to_dict

SAMPLE_ID = re.compile(r'^([a-z]+)(\d+)$')


class BaseSuite(ABC):
    name: str = ''

    def __init__(self, config: ScenarioConfig):
        self.config = config
        self.logger = logging.getLogger(f"suites.{self.name}")
        self.geometry = Geometry(config.geometry, config.chirality, config.inner_radius)
        self.arithmetic = Arithmetic.from_name(config.backend.value, config.tolerance)
        self.n_samples = config.samples_for(self.name)
        self.rng = suite_rng(config.seed, self.name)
        self.sampler = FormSampler(self.geometry, self.rng, self.arithmetic)
        self.regions = RegionSampler(self.geometry, self.rng)
        self.report = SuiteReport(self.name, config.geometry.value, config.chirality.value,
                                  config.backend.value, self.n_samples)
        self.duration: float = 0.0
        self._replay: Dict[str, Sequence] = {}

    @abstractmethod
    def execute(self) -> None:
        """Evaluate the suite's identities, adding records to ``self.report``."""

    def record(self, records: Iterable[CheckRecord]) -> None:
        for r in records:
            self.report.add(r)

    def check(self, identity: str, sample_id: str, ok: bool, detail: Dict[str, Any] = None) -> CheckRecord:
        return self.report.add(CheckRecord(identity, sample_id, 0.0 if ok else 1.0, bool(ok), detail or {}))

    def remember(self, prefix: str, samples: Sequence) -> None:
        """Keep samples addressed as ``<prefix><index>`` so failures can carry them."""
        self._replay[prefix] = samples

    def _attach_replay(self) -> None:
        for record in self.report.failures:
            match = SAMPLE_ID.match(record.sample_id)
            if not match or match.group(1) not in self._replay:
                continue
            samples = self._replay[match.group(1)]
            index = int(match.group(2))
            if index < len(samples):
                sample = samples[index]
                forms = sample if isinstance(sample, tuple) else (sample,)
                record.detail['replay'] = [form_to_dict(f) for f in forms]

    def expect_error(self, identity: str, error_type, action) -> CheckRecord:
        """Record whether ``action()`` raises ``error_type``."""
        try:
            action()
        except error_type as e:
            return self.check(identity, 'error', True, {'message': str(e)})
        return self.check(identity, 'error', False, {'message': 'no error raised'})

    def run(self) -> SuiteReport:
        try:
            self.logger.info(f"Starting suite: {self.name}")
            start_time = datetime.now()

            self.execute()
            self._attach_replay()

            end_time = datetime.now()
            self.duration = (end_time - start_time).total_seconds()

            if self.report.passed:
                self.logger.info(f"Suite {self.name} passed {len(self.report.checks)} checks in {self.duration:.2f}s")
            else:
                self.logger.warning(f"Suite {self.name} has {len(self.report.failures)} failed checks "
                                    f"(max residual {self.report.max_residual:g}) in {self.duration:.2f}s")

        except Exception as e:
            self.report.error = f"{type(e).__name__}: {e}"
            self.logger.error(f"Suite {self.name} failed with exception: {str(e)}", exc_info=True)

        return self.report

