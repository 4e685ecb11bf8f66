# qpkit.cli.canvas


import logging
log = logging.getLogger()

from .. import io
from ..canvas import (Verdict, build_canvas, homology_h1, pi1_presentation, tietze_simplify,
                      is_simply_connected)
from ._input import read_document, is_planar


EXIT_CODES = {Verdict.YES: 0, Verdict.NO: 1, Verdict.UNKNOWN: 2}


def command(args, parser, cfg):
    from ..qp import qp_from_dict
    from ..planar import planar_from_dict

    doc = read_document(args.path)
    embedding = planar_from_dict(doc) if is_planar(doc) else None
    qp = embedding.qp if embedding is not None else qp_from_dict(doc)
    canvas = build_canvas(qp)
    effort = cfg.get("effort_bound")
    if args.h1:
        h1 = homology_h1(canvas)
        io.print_obj({"rank": h1.rank, "torsion": h1.torsion, "group": str(h1)})
        return 0
    if args.pi1:
        presentation = tietze_simplify(pi1_presentation(canvas), effort)
        io.print_obj(presentation.to_dict())
        return 0
    if args.simply_connected:
        verdict = is_simply_connected(canvas, effort, embedding)
        io.print_obj({"name": qp.name, "simply_connected": str(verdict)})
        return EXIT_CODES[verdict]
    d = canvas.to_dict()
    io.print_obj(d)
    return 0
