# qpkit.cli.cover


import logging
log = logging.getLogger()

from .. import io
from ..errors import NotACut
from ..cuts import enumerate_cuts, is_cut, format_cut
from ..covering import build_covering_window, enumerate_slices
from ._input import load_qp, parse_ids, parse_window


def _cut(args, qp):
    if args.cut:
        cut = frozenset(parse_ids(args.cut))
    elif qp.cut:
        cut = frozenset(qp.cut)
    else:
        cuts = enumerate_cuts(qp)
        if not cuts:
            raise NotACut(f"{qp.name or 'QP'} has no cut")
        cut = cuts[0]
        log.info(f"no --cut given, using {format_cut(cut)}")
    if not is_cut(qp, cut):
        raise NotACut(f"{format_cut(cut)} is not a cut")
    return cut


def command(args, parser, cfg):
    qp = load_qp(args.path, cfg)
    cut = _cut(args, qp)
    if args.slices:
        io.print_lines(s.to_dict() for s in enumerate_slices(qp.quiver, cut))
        return 0
    lo, hi = parse_window(args.window)
    window = build_covering_window(qp.quiver, cut, lo, hi)
    if args.dot:
        print(window.to_dot())
        return 0
    io.print_obj({
        "cut": sorted(cut),
        "window": [lo, hi],
        "vertices": [list(c) for c in window.vertices],
        "arrows": [{"arrow": list(e["arrow"]), "src": list(e["src"]), "tgt": list(e["tgt"]),
                    "boundary": e["boundary"]} for e in window.arrows],
    })
    return 0
