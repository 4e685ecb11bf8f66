# qpkit.cli.report


import logging
log = logging.getLogger()

from .. import io
from ..lattice import transitivity_report
from ._input import load_qp


def command(args, parser, cfg):
    qp = load_qp(args.path, cfg)
    report = transitivity_report(qp, cfg.degree_bound_for(qp))
    if args.yaml:
        print(report.get_yaml(), end="")
    else:
        io.print_obj(report.get_dict())
    if report.selfinjective is None:
        return 2
    return 0 if report.hypotheses_met else 1
