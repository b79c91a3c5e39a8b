import json
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from cswzw.models.report import SuiteReport
from cswzw.models.scenario import ScenarioConfig
from cswzw.suites import SUITES
from cswzw.utils import errors

"""
Runs the selected suites and writes one deterministic JSON report per suite.
Suites may run on a thread pool; report writing is serialized.
"""


@dataclass
class RunSummary:
    output_dir: Path
    reports: List[SuiteReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed_suites(self) -> List[str]:
        return [r.suite for r in self.reports if not r.passed]

    def to_dict(self) -> dict:
        return {
            'pass': self.passed,
            'suites': [{
                'suite': r.suite,
                'pass': r.passed,
                'checks': len(r.checks),
                'failures': len(r.failures),
                'max_residual': r.max_residual,
                'error': r.error,
            } for r in self.reports],
        }


class SuiteRunner:
    def __init__(self, config: ScenarioConfig, output_dir=None):
        self.config = config
        self.output_dir = Path(output_dir or config.output_dir)
        self.write_lock = threading.Lock()  # report files are written one at a time
        self.logger = logging.getLogger(__name__)

    def resolve(self, names: Optional[Sequence[str]] = None) -> List[str]:
        names = list(names) if names else list(self.config.suites)
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise errors.ConfigError([f"suite: {errors.UNKNOWN_SUITE.format(name=n)}" for n in unknown])
        return names

    def _write_report(self, report: SuiteReport) -> Path:
        with self.write_lock:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            path = self.output_dir / f"{report.suite}.json"
            path.write_text(report.to_json())
            self.logger.debug(f"Report written: {path}")
            return path

    def run_suite(self, name: str) -> SuiteReport:
        report = SUITES[name](self.config).run()
        self._write_report(report)
        return report

    def run(self, names: Optional[Sequence[str]] = None) -> RunSummary:
        names = self.resolve(names)
        self.logger.info(f"Running {len(names)} suites with {self.config.max_workers} workers")
        if self.config.max_workers > 1 and len(names) > 1:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as pool:
                reports = list(pool.map(self.run_suite, names))
        else:
            reports = [self.run_suite(name) for name in names]

        summary = RunSummary(self.output_dir, reports)
        with self.write_lock:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            (self.output_dir / 'summary.json').write_text(
                json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n")
        if summary.passed:
            self.logger.info(f"All {len(reports)} suites passed")
        else:
            self.logger.warning(f"Failed suites: {', '.join(summary.failed_suites)}")
        return summary
