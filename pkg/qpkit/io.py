# qpkit.io


"""File and other stream i/o methods.

Reading **text**, **json** and **yaml** files, writing text and json,
and printing objects and tables to the console.
"""


import os
import sys
import json
import yaml
import logging
log = logging.getLogger(__name__)

from . import console


### file input


def read_txt(path, *args, **kwargs):
    """Read text as string from a file.

    Args:
        path (str): A path to a file.
        args, kwargs: Any other argument passed to `open`,
            such as mode, encoding, etc.

    Returns:
        str: The text from the selected file.
    """
    with open(path, *args, **kwargs) as fs:
        return fs.read()


def read_json(path):
    """Read a JSON file into a dictionary object.

    Args:
        path (str): File path to JSON formatted file.

    Returns:
        dict: Content of a JSON file parsed as dictionary.
    """
    with open(path, "r") as fs:
        return json.load(fs)


def read_yaml(path):
    """Read a YAML file.

    Read a YAML formatted file into a dictionary object.
    Supports usage of `!include`d files.

    Args:
        path (str): File path.

    Returns:
        dict: Content of a YAML file parsed as dictionary,
            empty if the file is missing or broken.
    """
    # safe yaml loader extended with '!include' function
    class SafeIncluder(yaml.SafeLoader):
        def include(self, node):
            filename = os.path.join(os.path.dirname(self.stream.name), node.value)
            with open(filename, 'r') as f:
                return yaml.load(f, SafeIncluder)
    SafeIncluder.add_constructor('!include', SafeIncluder.include)
    d = {}
    if not os.path.isfile(path):
        log.error("missing YAML file at {}".format(path))
        return d
    with open(path, "r") as fs:
        try:
            log.info("parsing YAML from file {}".format(path))
            d = yaml.load(fs, Loader=SafeIncluder)
        except yaml.YAMLError as e:
            log.error("failed importing {} YAML {}".format(path, e))
    log.debug("parsed YAML content as {}".format(d))
    return d if d is not None else {}


### file output


def write_txt(text, path):
    """Write text to a file.

    Args:
        text (str): Text to write to a file at `path`.
        path (str): File path.
    """
    with open(path, "w") as fs:
        fs.write(text)


def write_json(path, obj, default=str):
    """Write an object representation to a json file.

    Non-JSON values such as fractions are written with `default`.
    """
    with open(path, "w") as fs:
        fs.write(json.dumps(obj, default=default, indent=2))


### console output


def dumps(obj):
    return json.dumps(obj, indent=4, default=str)


def print_obj(obj):
    console.flush(dumps(obj))


def print_lines(objs):
    """Print one compact JSON document per line."""
    for obj in objs:
        console.flush(json.dumps(obj, default=str, sort_keys=True))


def print_table(rows, output=sys.stdout, columns=None, na=""):
    """Print a list of dictionaries as an aligned table."""
    if not rows:
        return
    columns = columns or list(dict.fromkeys(key for row in rows for key in row))
    cells = [[na if row.get(col) is None else str(row.get(col)) for col in columns] for row in rows]
    widths = [max(len(col), *(len(r[i]) for r in cells)) for i, col in enumerate(columns)]
    print("  ".join(col.ljust(w) for col, w in zip(columns, widths)), file=output)
    for r in cells:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)), file=output)
