from functools import partial
import logging

from . import default_config_entry as dc

# The minimum log level that goes to the console. Command output goes to
# stdout, so the console log stays quiet unless asked otherwise
LOG_LEVEL_CONSOLE = dc.DefaultConfigEntry(
    section='log',
    default=logging.WARNING,
    cast_func=dc.to_log_level,
    expected='DEBUG, INFO, WARN, WARNING, ERROR, or CRITICAL'
)

# The minimum log level that goes to the log files
LOG_LEVEL_FILE = dc.DefaultConfigEntry(
    section='log',
    default=logging.DEBUG,
    cast_func=dc.to_log_level,
    expected='DEBUG, INFO, WARN, WARNING, ERROR, or CRITICAL'
)

# Whether to write rotating log files at all
LOG_TO_FILE = dc.DefaultConfigEntry(
    section='log',
    default=True,
    cast_func=dc.to_bool,
    expected='true or false'
)

# Max size of each log file in kilobytes (default = 5MB)
LOG_MAX_SIZE = dc.DefaultConfigEntry(
    section='log',
    default=5120,
    cast_func=partial(dc.to_int, min_value=0),
    expected='a positive integer or 0'
)

# The number of log files to retain
LOG_BACKUP_COUNT = dc.DefaultConfigEntry(
    section='log',
    default=5,
    cast_func=partial(dc.to_int, min_value=0),
    expected='a positive integer or 0'
)

# Minimum log level for networkx and hypothesis internals
THIRD_PARTY_LOG_LEVEL = dc.DefaultConfigEntry(
    section='log',
    default=logging.WARNING,
    cast_func=dc.to_log_level,
    expected='DEBUG, INFO, WARN, WARNING, ERROR, or CRITICAL'
)

################################################################################

# The largest number of marked vertices that is enumerated without --force.
# Enumeration visits 2^n vertex subsets
ENUMERATION_VERTEX_LIMIT = dc.DefaultConfigEntry(
    section='enumeration',
    default=24,
    cast_func=partial(dc.to_int, min_value=1, max_value=63),
    expected='an integer from 1 to 63'
)

# The number of worker processes used for subset enumeration. 1 runs
# everything in the calling process
ENUMERATION_THREADS = dc.DefaultConfigEntry(
    section='enumeration',
    default=1,
    cast_func=partial(dc.to_int, min_value=1),
    expected='a positive integer'
)

# Graphs with fewer marked vertices than this are always enumerated inline,
# regardless of the worker count
PARALLEL_MIN_VERTICES = dc.DefaultConfigEntry(
    section='enumeration',
    default=14,
    cast_func=partial(dc.to_int, min_value=1, max_value=63),
    expected='an integer from 1 to 63'
)

# The number of subset ranges handed to each worker
PARALLEL_CHUNKS_PER_WORKER = dc.DefaultConfigEntry(
    section='enumeration',
    default=4,
    cast_func=partial(dc.to_int, min_value=1),
    expected='a positive integer'
)
