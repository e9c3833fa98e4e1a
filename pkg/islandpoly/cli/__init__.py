from .check_file import parse_check_file
from .commands import COMMANDS
from .smap import MapDocument, parse_document, parse_smap, render_smap
