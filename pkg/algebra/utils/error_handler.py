from functools import wraps
from typing import Any, Callable

import click

from algebra.exceptions import (
    DSLParseError,
    KernelError,
    ParameterRangeError,
    UndefinedTermError,
    VerificationFailure,
)
from .logger import KernelLogger

logger = KernelLogger("ErrorHandler")

USAGE_ERRORS = (ParameterRangeError, DSLParseError, UndefinedTermError)


def handle_cli_errors(func: Callable) -> Callable:
    """Translate kernel exceptions raised by a command into exit codes.

    Usage-type errors exit with 2, failed identities and other kernel
    errors exit with 1. The message goes to stderr.
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as e:
            raise click.UsageError(str(e))
        except VerificationFailure as e:
            click.echo(f"FAILED: {e.identity}" + (f" ({e.detail})" if e.detail else ""), err=True)
            raise click.exceptions.Exit(1)
        except KernelError as e:
            logger.logger.error(f"Error in {func.__name__}: {str(e)}", exc_info=True)
            raise click.exceptions.Exit(1)
    return wrapper
