from configparser import ConfigParser
from collections import defaultdict
import logging
import os
from pathlib import Path
from typing import Any

from .default_config_entry import DefaultConfigEntry
from . import default_values

_log = logging.getLogger(__name__)

# Move all the defaults into a dictionary
DEFAULTS: dict[str, DefaultConfigEntry] = {
    d: getattr(default_values, d) for d in dir(default_values)
    if isinstance(getattr(default_values, d), DefaultConfigEntry)
}


class ConfigError(Exception):
    """
    Raised when a configuration value is unknown or cannot be cast. Unlike
    input errors, this points at the user's environment or config file.
    """

    pass


class Config:
    """
    A loader for program configuration. Checks environment variables
    followed by the config file. Loads configuration only on request,
    and then caches it.
    """

    def __init__(self, file: Path):
        self.file: Path = file
        self.cache: dict[str, Any] = {}
        self.config: ConfigParser | None = None

    def __getattr__(self, key: str) -> Any:
        """
        Get some configuration, and then cache it. This checks
        sources in the following order until finding a value:

        1. The cache of already-obtained configurations.
        2. Environment variables with exactly the same name.
        3. The config file (loading that file if it was not
           already loaded).
        4. The defaults.

        Args:
            key (str): The desired configuration.

        Returns:
            Any: The value of the specified configuration.

        Raises:
            ConfigError: If the key is unknown or its value is invalid.
        """

        # Dunder lookups (copy, pickle) must not be treated as settings
        if key.startswith('__'):
            raise AttributeError(key)

        if key in self.cache:
            return self.cache[key]

        if key not in DEFAULTS:
            raise ConfigError(f"Invalid configuration key '{key}'")
        default = DEFAULTS[key]

        # Check environment variables
        env = os.getenv(key)
        if env is not None:
            val = default.cast(env, key, self._raise)
            self.cache[key] = val
            return val

        # Check config file
        if self.config is None:
            self.reload()
        if self.config.has_option(default.section, key):
            val = self.config.get(default.section, key)
            # An empty string indicates the value is unset
            if val != '':
                val = default.cast(val, key, self._raise)
                self.cache[key] = val
                return val

        self.cache[key] = default.value
        return default.value

    def override(self, **values: Any) -> None:
        """
        Set configurations for the rest of this process, taking precedence
        over every other source. Used by command line flags such as
        --threads.

        Args:
            **values: Configuration keys and their already-cast values.

        Raises:
            ConfigError: If any key is unknown.
        """

        for key, value in values.items():
            if key not in DEFAULTS:
                raise ConfigError(f"Invalid configuration key '{key}'")
            self.cache[key] = value

    def reload(self, clear_cache: bool = False) -> None:
        """
        Reload the configuration file. This will not affect
        processes that have already obtained configurations; only
        subsequent calls are affected.

        If self.file is not a valid file, it is created via
        self.save_file().

        Args:
            clear_cache (bool, optional): Clear the cache of
            already-obtained configurations.
        """

        if self.file.is_file():
            self.config = ConfigParser()
            self.config.read(self.file, encoding='utf-8')
        else:
            self.config = self.save_file()

        if clear_cache:
            self.cache.clear()

    def save_file(self) -> ConfigParser:
        """
        Overwrite (or, more likely, create) the config file using
        all currently cached values and all default values.

        When the file cannot be written, the configuration is still
        returned so the program can run on its defaults.

        Returns:
            ConfigParser: The saved defaulted configuration.
        """

        # Group defaults by section, and track whether this isn't
        # just the default configuration
        non_default = False
        sections = defaultdict(dict)
        for d, v in DEFAULTS.items():
            if d in self.cache:
                s = v.to_str(self.cache[d])
                non_default = non_default or s != v.value_str
            else:
                s = v.value_str

            sections[v.section][d] = s

        cfg = ConfigParser()
        for section, values in sections.items():
            cfg[section] = values

        try:
            if self.file.exists() and not self.file.is_file():
                raise IsADirectoryError(str(self.file))
            self.file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.file, 'w', encoding='utf-8') as f:
                cfg.write(f)
        except OSError as e:
            _log.warning(f"Couldn't save the configuration to "
                         f"'{self.file}': {e}. Using defaults")
            return cfg

        _log.info(f"Saved the {'current' if non_default else 'default'} "
                  f"configuration to '{self.file}'")
        return cfg

    @staticmethod
    def _raise(msg: str) -> None:
        """
        Error callback for casting failures.

        Args:
            msg: The error message.

        Raises:
            ConfigError: Always.
        """

        raise ConfigError(msg)
