# qpkit.cli.mutate


import logging
log = logging.getLogger()

from .. import io
from ..errors import BadParameter
from ..mutation import mutate, orbit_mutate
from ..selfinjective import is_selfinjective
from ._input import load_qp, load_planar, parse_permutation


def _sigma(args, qp, cfg):
    if args.sigma:
        return parse_permutation(args.sigma)
    log.info("no --sigma given, computing the Nakayama permutation")
    report = is_selfinjective(qp, cfg.degree_bound_for(qp), cfg.get("degree_ceiling"))
    if not report.selfinjective:
        raise BadParameter(f"{qp.name or 'QP'} is not selfinjective, pass --sigma")
    return report.nakayama


def command(args, parser, cfg):
    if args.planar:
        from ..planar import planar_mutate, planar_orbit_mutate
        pqp = load_planar(args.path, cfg)
        if args.orbit:
            image = planar_orbit_mutate(pqp, _sigma(args, pqp.qp, cfg), args.vertex)
        else:
            image = planar_mutate(pqp, args.vertex)
        io.print_obj(image.to_dict())
        return 0
    qp = load_qp(args.path, cfg)
    bound = cfg.get("reduction_bound")
    if args.orbit:
        result = orbit_mutate(qp, _sigma(args, qp, cfg), args.vertex, bound)
    else:
        result = mutate(qp, args.vertex, bound)
    d = result.qp.to_dict()
    d["reduced"] = result.reduced
    d["trivial_rank"] = result.trivial_rank
    io.print_obj(d)
    return 0 if result.reduced else 2
