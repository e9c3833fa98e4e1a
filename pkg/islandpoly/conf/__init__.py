from pathlib import Path

from platformdirs import PlatformDirs

from .config import Config

# The name and author of the program. Used to get the data directory
APP_NAME = 'islandpoly'
APP_AUTHOR = 'islandpoly'
_CONFIGURATION_FILE_NAME = 'config.ini'

# Directories are created on demand (see Config.save_file and
# logger_conf.configure), so that importing the library never touches disk
_PLATFORM_DIRS = PlatformDirs(APP_NAME, APP_AUTHOR)
CONFIG_DIR = Path(_PLATFORM_DIRS.user_config_dir)
DATA_DIR = Path(_PLATFORM_DIRS.user_data_dir)

# Initialize the settings
settings = Config(CONFIG_DIR / _CONFIGURATION_FILE_NAME)
