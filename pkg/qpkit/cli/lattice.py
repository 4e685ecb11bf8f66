# qpkit.cli.lattice


import logging
log = logging.getLogger()

from .. import io
from ..errors import SizeBoundExceeded
from ..lattice import cut_lattice, planar_mutation_lattice, export_dot, export_json
from ._input import load_qp, load_planar


def _emit(lattice, args):
    text = export_dot(lattice) if args.dot else export_json(lattice)
    if args.output:
        io.write_txt(text, args.output)
        log.info(f"wrote {args.output}")
    else:
        print(text, end="")


def command(args, parser, cfg):
    if args.planar:
        pqp = load_planar(args.path, cfg)
        bound = args.size_bound or cfg.get("lattice_size_bound")
        try:
            lattice = planar_mutation_lattice(pqp, bound, args.unrestricted, cfg.degree_bound_for(pqp.qp))
        except SizeBoundExceeded as e:
            log.error(str(e))
            _emit(e.partial, args)
            return e.exit_code
    else:
        qp = load_qp(args.path, cfg)
        lattice = cut_lattice(qp, degree_bound=cfg.degree_bound_for(qp), isomorphism_classes=args.isomorphism_classes)
    log.info(f"{len(lattice)} nodes, {len(lattice.edges)} edges, connected {lattice.is_connected()}")
    _emit(lattice, args)
    return 0
