# qpkit.cli.selfinjective


import logging
log = logging.getLogger()

from .. import io
from ..selfinjective import is_selfinjective
from ._input import load_qp


def command(args, parser, cfg):
    qp = load_qp(args.path, cfg)
    report = is_selfinjective(qp, cfg.degree_bound_for(qp), cfg.get("degree_ceiling"))
    d = report.get_dict()
    if args.algebra:
        d["algebra"] = report.algebra.to_dict()
    io.print_obj(d)
    return 0 if report.selfinjective else 1
