import logging
from typing import Any, Callable, Optional


class DefaultConfigEntry:
    def __init__(self,
                 section: str,
                 default: Any = None,
                 cast_func: Callable[[str], Any] | None = None,
                 expected: str | None = None,
                 has_default: bool = True):
        """
        Args:
            section (str): The name of the section in the config file
            in which this option is stored.
            default: The default value.
            cast_func: Function to cast a string value to the
            appropriate data type.
            expected: If casting fails, this string is included in
            the error message to indicate what input was expected.
            It immediately follows the word "expected."
            has_default: Whether there is a default value at all.
        """

        self.section = section
        self.value = default
        self.cast_func = cast_func
        self.expected = expected
        self.has_default = has_default

        # The value as a string for saving to the config file
        self.value_str = self.to_str(default)

    def cast(self,
             string: str,
             name: str,
             on_error: Callable[[str], None]) -> Any:
        """
        Cast a string value to the appropriate data type.

        Args:
            string: The value to cast
            name: The name of this configuration.
            on_error: A function to call with an error string in
            the event that casting fails.

        Returns:
            The casted value.
        """

        try:
            if self.cast_func:
                return self.cast_func(string)
            else:
                return string
        except KeyboardInterrupt:
            raise
        except Exception as e:
            msg = f"Invalid value '{string}' for '{name}'"
            if str(e):
                msg += f': {e}'
            if self.expected:
                msg += '. Expected ' + self.expected
            on_error(msg)

    def to_str(self, value: Any) -> str:
        """
        Convert some value to a string to be saved in the config file.
        Log levels are written by name and booleans in lowercase, so that
        the saved file casts back to the same value.

        Args:
            value: The value to save.

        Returns:
            The value as a string.
        """

        if value is None and not self.has_default:
            return ''
        elif self.cast_func == to_log_level and isinstance(value, int):
            return logging.getLevelName(value)
        elif isinstance(value, bool):
            return str(value).lower()
        else:
            return str(value)


def to_log_level(s: str) -> int:
    """
    Cast a log level string to the appropriate integer. If the string
    casts directly to an integer, it uses that. Otherwise, it's looked
    up by name.

    Args:
        s: The string to cast.

    Returns:
        The integer level.

    Raises:
        ValueError: If the name is not a known level.
    """

    try:
        return int(s)
    except ValueError:
        level = logging.getLevelName(s.strip().upper())
        if not isinstance(level, int):
            raise ValueError(f"unknown log level '{s}'")
        return level


def to_int(s: Optional[str],
           min_value: Optional[int] = None,
           max_value: Optional[int] = None) -> int:
    """
    Cast a string to an integer, and require it to be within the given range.
    Use None for the min or max values to disable that constraint.

    Args:
        s (Optional[str]): The string to cast.
        min_value (Optional[int], optional): The minimum accepted integer
        (inclusive). If None, there is no minimum. Defaults to None.
        max_value (Optional[int], optional): The maximum accepted integer
        (inclusive). If None, there is no maximum. Defaults to None.

    Returns:
        int: The integer.

    Raises:
        ValueError: If s is not an integer or is out of range.
    """

    i = int(s)
    if min_value is not None and i < min_value:
        raise ValueError(f'{i} is less than {min_value}')
    if max_value is not None and i > max_value:
        raise ValueError(f'{i} is greater than {max_value}')
    return i


def to_bool(s: str) -> bool:
    """
    Cast a string to a boolean. Accepts the usual spellings, case
    insensitive: true/false, yes/no, on/off, 1/0.

    Args:
        s: The string to cast.

    Returns:
        The boolean.

    Raises:
        ValueError: If the string is not recognized.
    """

    value = s.strip().lower()
    if value in ('true', 'yes', 'on', '1'):
        return True
    if value in ('false', 'no', 'off', '0'):
        return False
    raise ValueError(f"'{s}' is not a boolean")
