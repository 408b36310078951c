from typing import Any, Dict, Iterable, Iterator, List

from hodgepack.exception import DiscrepancyError

__all__ = ['Check', 'Checks', 'expect']


def expect(quantity: str, expected: Any, computed: Any, **context) -> None:
    if expected != computed:
        text = ', '.join(f'{k}={v}' for k, v in context.items()) or None
        raise DiscrepancyError(quantity, expected, computed, context=text)


class Check:
    """
    Base class for all self-test checks. A check enumerates cases; each case
    either returns a record or raises a MathematicalError.
    """
    name: str = 'check'

    def set_verifier(self, verifier: Any) -> None:
        self.verifier = verifier
        self._set_verifier(verifier)

    def _set_verifier(self, verifier: Any) -> None:
        pass

    def cases(self) -> List[Any]:
        return list(self._cases())

    def _cases(self) -> Iterable[Any]:
        """
        The inputs this check runs on.
        """
        raise NotImplementedError

    def run_case(self, case: Any) -> Dict[str, Any]:
        return self._run_case(case) or {}

    def _run_case(self, case: Any) -> Dict[str, Any]:
        raise NotImplementedError

    def finalize(self) -> Dict[str, Any]:
        return self._finalize() or {}

    def _finalize(self) -> Dict[str, Any]:
        """
        Called after the last case; may raise on aggregate conditions.
        """
        return {}

    def __str__(self) -> str:
        return self.name


class Checks:
    """
    An ordered, name-addressable collection of checks.
    """
    def __init__(self, checks: List[Check]) -> None:
        names = [check.name for check in checks]
        if len(set(names)) != len(names):
            raise ValueError(f'duplicate check names: {names}.')
        self.checks = checks

    def select(self, names: Iterable[str]) -> 'Checks':
        names = list(names)
        known = {check.name for check in self.checks}
        unknown = [name for name in names if name not in known]
        if unknown:
            raise ValueError(f'unknown checks {unknown}; '
                             f'choose from {sorted(known)}.')
        return Checks([check for check in self.checks if check.name in names])

    def set_verifier(self, verifier: Any) -> None:
        for check in self.checks:
            check.set_verifier(verifier)

    def __getitem__(self, index: int) -> Check:
        return self.checks[index]

    def __len__(self) -> int:
        return len(self.checks)

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)
