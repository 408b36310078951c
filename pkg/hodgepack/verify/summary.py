from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

from hodgepack.verify.writers import SummaryWriter

__all__ = ['CheckResult', 'Summary']


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'cases': self.cases,
            'failures': self.failures,
            'seconds': round(self.seconds, 3),
            'details': self.details
        }


class Summary:
    def __init__(self) -> None:
        self.results: Dict[str, CheckResult] = OrderedDict()

    def set_verifier(self, verifier: Any) -> None:
        self.verifier = verifier
        self.writers = [
            writer for writer in verifier.writers
            if isinstance(writer, SummaryWriter)
        ]

    def add_result(self, result: CheckResult) -> None:
        self.results[result.name] = result
        for writer in self.writers:
            writer.add_result(result)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results.values())

    def items(self) -> Iterable[Tuple[str, CheckResult]]:
        return self.results.items()

    def __contains__(self, name: str) -> bool:
        return name in self.results

    def __getitem__(self, name: str) -> CheckResult:
        return self.results[name]
