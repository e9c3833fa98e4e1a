import logging

from ...conf.config import ConfigError
from .validation_error import ValidationError

_log = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def handle_err(error: Exception, text: str) -> int:
    """
    Log an error raised while running a command, and pick the exit code.
    Input errors, unreadable files and bad configuration are expected and
    logged without a traceback, except at the debug level. Anything else is
    a bug and gets the full traceback.

    Args:
        error: The exception.
        text: Text explaining what was being done when it happened.

    Returns:
        int: EXIT_INPUT_ERROR for validation, file and config errors;
        EXIT_INTERNAL_ERROR otherwise.
    """

    if isinstance(error, (ValidationError, ConfigError, OSError)):
        _log.error(f'{text}: {error}')
        _log.debug('Traceback:', exc_info=error)
        return EXIT_INPUT_ERROR

    _log.critical(f'{text}: {error}', exc_info=error)
    return EXIT_INTERNAL_ERROR
