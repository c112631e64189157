from .logger import KernelLogger
from .error_handler import handle_cli_errors
from .workers import parallel_map

__all__ = ["KernelLogger", "handle_cli_errors", "parallel_map"]
