# qpkit.cli.__init__


"""command line option parsing"""


import argparse
import logging
log = logging.getLogger()

from . import config
from . import help
from . import family
from . import selfinjective
from . import cuts
from . import mutate
from . import cover
from . import canvas
from . import lattice
from . import report
from ..logger import configure_logging, verbosity_level
from ..config import Config
from ..errors import QPError
from .. import version


def show_version(args, parser, cfg):
    print(f"{__name__} version {version}")
    return 0


def build_parser():

    ### global arguments
    s = argparse.ArgumentParser(add_help=False)
    s.add_argument("-c", "--config", dest="config_path", metavar="PATH", default=None, help=f"define main configuration file path; {config.QPKIT_INFO}")
    s.add_argument('-v', '--verbose', action='count', default=0, help="enable verbose mode and show warning/info/debug logs")
    s.add_argument("--degree-bound", type=int, default=None, metavar="N", help="path length up to which ideals are completed; overrides the configuration.")
    s.add_argument("--seed-order", choices=["id", "canonical"], default=None, help="keep input labels or relabel canonically before computing.")
    p = argparse.ArgumentParser(description="exact computations with quivers with potential", parents=[s])
    psub = p.add_subparsers(dest='command', title="commands", metavar="COMMAND", required=True)

    # command: version
    q = psub.add_parser("version", aliases=["--version", "-V"], help="show version")
    q.set_defaults(func=show_version)

    # command: help
    q = psub.add_parser("help", help="show help")
    q.set_defaults(func=help.command)

    # command: config
    q = psub.add_parser("config", parents=[s], help="parse and display configuration collated from --config PATH.")
    q.add_argument("-t", "--template", action="store_true", help="print a template")
    q.set_defaults(func=config.command)

    # command: family
    q = psub.add_parser("family", parents=[s], help="build a member of a known QP family as JSON.")
    q.add_argument("name", nargs="?", help="family name, see --list.")
    q.add_argument("params", nargs="*", help="family parameters.")
    q.add_argument("-l", "--list", action="store_true", help="list families and their parameters.")
    q.add_argument("-o", "--output", metavar="PATH", default=None, help="write the QP to PATH instead of stdout.")
    q.set_defaults(func=family.command)

    # command: selfinjective
    q = psub.add_parser("selfinjective", parents=[s], help="decide selfinjectivity; exit 0 iff selfinjective.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("-a", "--algebra", action="store_true", help="include the basis and products of the Jacobian algebra.")
    q.set_defaults(func=selfinjective.command)

    # command: cuts
    q = psub.add_parser("cuts", parents=[s], help="list all cuts as JSON lines.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("-a", "--algebraic", action="store_true", help="decide whether each cut is algebraic.")
    q.add_argument("--classes", action="store_true", help="list the compatibility class of each cut.")
    q.add_argument("-t", "--table", action="store_true", help="print an aligned table instead of JSON lines.")
    q.set_defaults(func=cuts.command)

    # command: mutate
    q = psub.add_parser("mutate", parents=[s], help="mutate at a vertex or a Nakayama orbit.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("-k", "--vertex", required=True, help="vertex to mutate at.")
    q.add_argument("--orbit", action="store_true", help="mutate along the whole σ-orbit of the vertex.")
    q.add_argument("--sigma", default=None, metavar="PERM", help="permutation 'v:w,...'; default: the Nakayama permutation.")
    q.add_argument("--planar", action="store_true", help="use planar mutation on the embedded QP.")
    q.set_defaults(func=mutate.command)

    # command: cover
    q = psub.add_parser("cover", parents=[s], help="show a window of the covering quiver of a cut.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("--cut", default=None, metavar="IDS", help="comma separated arrow ids; default: the stored or first cut.")
    q.add_argument("--window", default="0:1", metavar="LO:HI", help="levels to show.")
    q.add_argument("--dot", action="store_true", help="emit DOT instead of JSON.")
    q.add_argument("--slices", action="store_true", help="list the slices as height functions.")
    q.set_defaults(func=cover.command)

    # command: canvas
    q = psub.add_parser("canvas", parents=[s], help="topology of the canvas of a QP.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--h1", action="store_true", help="first homology group.")
    g.add_argument("--pi1", action="store_true", help="simplified presentation of the fundamental group.")
    g.add_argument("--simply-connected", action="store_true", help="exit 0 yes, 1 no, 2 unknown.")
    q.set_defaults(func=canvas.command)

    # command: lattice
    q = psub.add_parser("lattice", parents=[s], help="cut-mutation or planar mutation lattice as JSON or DOT.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("--planar", action="store_true", help="explore planar mutations of the embedded QP.")
    q.add_argument("--unrestricted", action="store_true", help="mutate at single vertices instead of Nakayama orbits.")
    q.add_argument("--size-bound", type=int, default=None, metavar="N", help="stop after N nodes.")
    q.add_argument("-i", "--isomorphism-classes", action="store_true", help="one node per cut up to automorphisms of the QP.")
    q.add_argument("--dot", action="store_true", help="emit DOT instead of JSON.")
    q.add_argument("-o", "--output", metavar="PATH", default=None, help="write the lattice to PATH instead of stdout.")
    q.set_defaults(func=lattice.command)

    # command: report
    q = psub.add_parser("report", parents=[s], help="check the hypotheses of cut transitivity and list mutation paths.")
    q.add_argument("path", help="QP JSON file, '-' for stdin.")
    q.add_argument("-y", "--yaml", action="store_true", help="print YAML instead of JSON.")
    q.set_defaults(func=report.command)

    return p


def main(argv=None):

    p = build_parser()

    # Parse arguments and config
    a = p.parse_args(argv)

    # Configure logging
    configure_logging(verbosity_level(getattr(a, "verbose", 0)))

    # Load configuration and trigger command process
    try:
        c = Config(getattr(a, "config_path", None))
        c.override(degree_bound=getattr(a, "degree_bound", None), seed_order=getattr(a, "seed_order", None))
        return a.func(a, p, c) or 0
    except QPError as e:
        log.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except (ValueError, OSError) as e:
        log.error(str(e))
        return 1
