from typing import Optional, Sequence


class KernelError(Exception):
    """Base exception for every failure raised by the algebra kernel."""

    default_code = "E_KERNEL"

    def __init__(self, message: str, error_code: Optional[str] = None):
        self.message = message
        self.error_code = error_code or self.default_code
        super().__init__(message)

    def __str__(self):
        return f"[{self.error_code}] {self.message}"


class ParameterRangeError(KernelError):
    """A precondition on integer parameters or shapes does not hold."""

    default_code = "E_RANGE"


class AlphabetMismatchError(KernelError):
    """Ring operation between polynomials over different alphabets."""

    default_code = "E_ALPHABET"


class InexactDivisionError(KernelError):
    default_code = "E_DIVISION"


class NotSymmetricError(KernelError):
    """Schur expansion requested for a polynomial that is not symmetric."""

    default_code = "E_SYMMETRY"

    def __init__(self, message: str, exponent: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.exponent = tuple(exponent) if exponent is not None else None


class RankBoundExceededError(KernelError):
    default_code = "E_RANK"

    def __init__(self, rank: int, bound: int):
        super().__init__(f"bundle rank {rank} exceeds the configured bound {bound}")
        self.rank = rank
        self.bound = bound


class InvalidBundleError(KernelError):
    default_code = "E_BUNDLE"


class DSLParseError(KernelError):
    """Syntax error in a bundle or symmetric-function expression."""

    default_code = "E_PARSE"

    def __init__(self, text: str, position: int, expected: Sequence[str]):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        found = text[position] if position < len(text) else "end of input"
        super().__init__(
            f"at position {position}: expected {' or '.join(self.expected)}, found {found!r}"
        )


class UndefinedTermError(KernelError):
    """An HRS term falls outside the regime r <= k <= n."""

    default_code = "E_UNDEFINED"


class VerificationFailure(KernelError):
    """A checked identity did not hold."""

    default_code = "E_VERIFY"

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        message = f"identity '{identity}' failed"
        if detail:
            message += f": {detail}"
        super().__init__(message)
