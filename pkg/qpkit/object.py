# qpkit.object


"""Report objects exported as JSON or YAML."""


import json
import yaml
import logging
log = logging.getLogger(__name__)


def plain(value):
    """Convert a value into JSON/YAML friendly builtins."""
    if isinstance(value, Parsable):
        return value.get_dict()
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


class Parsable(object):
    """A class where slots are parsable.

    Provides methods to export values of data slots into dictionaries,
    JSON or YAML and to import them back. Slots starting with an
    underscore are private and never exported.
    """

    def __str__(self):
        return self.get_json()

    def get_dict(self):
        """Return public data slots as a dictionary of builtins."""
        return {k: plain(v) for k, v in vars(self).items() if not k.startswith("_")}

    def get_json(self):
        """Return public data slots as a JSON string."""
        return json.dumps(self.get_dict(), indent=2)

    def get_yaml(self):
        """Return public data slots as a YAML string."""
        return yaml.safe_dump(self.get_dict())
