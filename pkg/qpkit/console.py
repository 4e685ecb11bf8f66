# qpkit.console


"""Console escape code based shell colors and print methods."""


import os
import sys
import logging
log = logging.getLogger(__name__)


class Color:
    """ANSI shell color escape codes."""
    none = "\033[0m"
    cyan = "\033[1;36m"
    magenta = "\033[1;35m"
    blue = "\033[1;34m"
    yellow = "\033[1;33m"
    green = "\033[1;32m"
    red = "\033[1;31m"
    bold = "\033[1m"
    dim = "\033[2m"


def paint(text, color, out=sys.stdout):
    """Wrap text into a color escape code if `out` is a terminal."""
    if not getattr(out, "isatty", lambda: False)():
        return str(text)
    return f"{color}{text}{Color.none}"


def verdict(flag):
    """Colored yes/no/unknown marker for table cells."""
    if flag is None:
        return paint("unknown", Color.yellow)
    if flag:
        return paint("yes", Color.green)
    return paint("no", Color.red)


def flush(msg):
    """rapid print to stdout

    Args:
        msg (str or list): A text, or list of lines, to send to stdout immediately.
    """
    lines = msg if isinstance(msg, list) else [msg]
    for line in lines:
        line = str(line).rstrip()
        line += os.linesep
        sys.stdout.write(line)
    sys.stdout.flush()
