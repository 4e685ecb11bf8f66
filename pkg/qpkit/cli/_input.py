# qpkit.cli._input


"""Reading QP documents and small option values for the commands."""


import sys
import json
import logging
log = logging.getLogger()

from .. import io
from ..errors import MalformedQP, BadParameter
from ..qp import qp_from_dict
from ..isomorphism import canonical_labels


def read_document(path):
    """JSON document from a file, or from stdin for ``-``."""
    text = sys.stdin.read() if path == "-" else io.read_txt(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedQP(f"malformed JSON in {path}: {e}") from None


def is_planar(document):
    return isinstance(document, dict) and ("embedding" in document or "coords" in document)


def load_qp(path, cfg=None):
    """QP from a document, relabelled canonically if the seed order asks for it."""
    qp = qp_from_dict(read_document(path))
    if cfg is not None and cfg.get("seed_order") == "canonical":
        vmap, amap = canonical_labels(qp)
        qp = qp.relabel(vmap, amap)
    return qp


def load_planar(path, cfg=None):
    from ..planar import planar_from_dict
    pqp = planar_from_dict(read_document(path))
    if cfg is not None and cfg.get("seed_order") == "canonical":
        vmap, amap = canonical_labels(pqp.qp)
        pqp = pqp.relabel(vmap, amap)
    return pqp


def parse_permutation(text):
    """``"1:3,2:4,3:1,4:2"`` or a JSON object."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return {str(k): str(v) for k, v in json.loads(text).items()}
        except (json.JSONDecodeError, AttributeError) as e:
            raise BadParameter(f"bad permutation {text!r}: {e}") from None
    try:
        perm = dict(tuple(x.strip() for x in part.split(":")) for part in text.split(","))
    except ValueError:
        raise BadParameter(f"bad permutation {text!r}, expected 'v:w,...'") from None
    if sorted(perm) != sorted(perm.values()):
        raise BadParameter(f"{text!r} is not a permutation")
    return perm


def parse_window(text):
    """``"lo:hi"`` as a pair of integers."""
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise BadParameter(f"bad window {text!r}, expected 'lo:hi'") from None
    return lo, hi


def parse_ids(text):
    return [x.strip() for x in text.split(",") if x.strip()] if text else []
