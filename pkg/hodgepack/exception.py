from typing import Any, Optional

__all__ = [
    'HodgepackError', 'InputError', 'ParseError', 'InconsistentInputError',
    'MathematicalError', 'FieldMismatchError', 'AdmissibilityError',
    'TableValidationError', 'SingularFormError', 'InvalidPeriodError',
    'DiscrepancyError', 'ConsistencyError'
]


class HodgepackError(Exception):
    """
    Base class for all errors raised by hodgepack.
    """
    pass


class InputError(HodgepackError, ValueError):
    """
    Malformed or inconsistent input (exit code 2).
    """
    pass


class ParseError(InputError):
    pass


class InconsistentInputError(InputError):
    pass


class MathematicalError(HodgepackError):
    """
    A mathematical statement failed (exit code 1).
    """
    pass


class FieldMismatchError(MathematicalError, ValueError):
    def __init__(self, d1: int, d2: int) -> None:
        super().__init__(f'elements of Q(sqrt(-{d1})) and Q(sqrt(-{d2})) '
                         'cannot be combined.')
        self.d1, self.d2 = d1, d2


class AdmissibilityError(MathematicalError):
    def __init__(self, embedding: int, p: int, q: int, dim: int) -> None:
        super().__init__(
            f'positive half twist is not defined: embedding {embedding} '
            f'carries ({p},{q}) with multiplicity {dim}.')
        self.embedding, self.p, self.q = embedding, p, q


class TableValidationError(MathematicalError):
    def __init__(self, report: Any) -> None:
        super().__init__('invalid Hodge table:\n' + str(report))
        self.report = report


class SingularFormError(MathematicalError):
    def __init__(self, radical_dim: int) -> None:
        super().__init__(
            f'hermitian form is degenerate (radical of dimension {radical_dim}).')
        self.radical_dim = radical_dim


class InvalidPeriodError(MathematicalError):
    pass


class DiscrepancyError(MathematicalError):
    def __init__(self,
                 quantity: str,
                 expected: Any,
                 computed: Any,
                 *,
                 context: Optional[str] = None) -> None:
        text = f'{quantity}: expected {expected}, computed {computed}'
        if context:
            text += f' ({context})'
        super().__init__(text + '.')
        self.quantity = quantity
        self.expected, self.computed = expected, computed


class ConsistencyError(MathematicalError):
    """
    An identity that holds for every valid input failed; this points at an
    arithmetic bug rather than at the input.
    """
    pass
