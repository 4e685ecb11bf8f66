# qpkit.cli.family


import sys
import logging
log = logging.getLogger()

from .. import io
from ..families import FAMILIES, build_family


def command(args, parser, cfg):
    if args.list or not args.name:
        io.print_table([{"family": k, "parameters": usage} for k, (_, usage) in FAMILIES.items()], output=sys.stdout)
        return 0
    obj = build_family(args.name, args.params)
    log.info(f"built {obj.name}: {len(obj.quiver.vertices)} vertices, {len(obj.quiver.arrows)} arrows")
    d = obj.to_dict()
    if args.output:
        io.write_json(args.output, d)
        log.info(f"wrote {args.output}")
    else:
        io.print_obj(d)
    return 0
