# qpkit.config


"""qpkit configuration file parser"""


import os
import yaml
import logging
log = logging.getLogger(__name__)

from . import io


QPKIT_CONFIG = "~/qpkit.yaml"
QPKIT_INFO = f"""
Detection of config file path:
1. if `path` option is given in CLI, use it's value, else
2. if `QPKIT_CONFIG` variable is set, use this, else
3. use default path {QPKIT_CONFIG} (built-in defaults if missing)
"""

DEFAULTS = {
    # null: 4 * |Q0| * (max cycle length), see Config.degree_bound_for
    "degree_bound": None,
    "degree_ceiling": 512,
    "reduction_bound": 40,
    "effort_bound": 200,
    "lattice_size_bound": 500,
    "seed_order": "id",
}


class Config(object):

    """qpkit configuration parser"""

    def __init__(self, path=None):
        explicit = path is not None or os.getenv("QPKIT_CONFIG") is not None
        if path is None:
            path = os.getenv("QPKIT_CONFIG")
        if path is None:
            path = QPKIT_CONFIG
        path = os.path.abspath(os.path.expanduser(path))
        self.path = path
        self.config = dict(DEFAULTS)
        if not os.path.exists(path):
            if explicit:
                raise ValueError(f"Cannot find configuration file '{path}'.")
            log.debug(f"no config at {path}, using defaults")
            return
        loaded = io.read_yaml(path) or {}
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            log.warning(f"ignoring unknown config keys {sorted(unknown)}")
        self.config.update({k: v for k, v in loaded.items() if k in DEFAULTS})
        log.debug(f"loaded config from path {self.path}")

    def __str__(self):
        return yaml.dump(self.config)

    def get(self, key):
        return self.config.get(key, DEFAULTS.get(key))

    def override(self, **kwargs):
        """Overwrite entries with values given on the command line."""
        for key, value in kwargs.items():
            if value is not None:
                self.config[key] = value
        return self

    def degree_bound_for(self, qp):
        """Starting degree bound for a QP.

        Uses the configured `degree_bound` or 4 * |Q0| * (max cycle length).
        """
        bound = self.get("degree_bound")
        if bound:
            return int(bound)
        return default_degree_bound(qp)


def default_degree_bound(qp):
    longest = max((len(w) for w in qp.potential.terms), default=2)
    return max(4, 4 * len(qp.quiver.vertices) * longest)
