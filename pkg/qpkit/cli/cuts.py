# qpkit.cli.cuts


import sys
import logging
log = logging.getLogger()

from .. import io, console
from ..errors import UndeterminedDimension
from ..cuts import enumerate_cuts, is_algebraic_cut, compatibility_class, format_cut


def census(qp, algebraic=False, classes=False, degree_bound=None):
    """One record per cut."""
    rows = []
    for c in enumerate_cuts(qp):
        row = {"cut": sorted(c)}
        if algebraic:
            try:
                row["algebraic"], row["diagnostic"] = is_algebraic_cut(qp, c, degree_bound)
            except UndeterminedDimension as e:
                log.warning(f"{format_cut(c)}: {e}")
                row["algebraic"], row["diagnostic"] = None, "undetermined"
        if classes:
            row["class"] = [sorted(d) for d in compatibility_class(qp.quiver, c)]
        rows.append(row)
    return rows


def table(rows):
    """Rows of :py:func:`census` as table cells."""
    cells = []
    for row in rows:
        cell = {"cut": format_cut(row["cut"])}
        if "algebraic" in row:
            cell["algebraic"] = console.verdict(row["algebraic"])
            cell["diagnostic"] = row["diagnostic"]
        if "class" in row:
            cell["class"] = len(row["class"])
        cells.append(cell)
    return cells


def command(args, parser, cfg):
    from ._input import load_qp
    qp = load_qp(args.path, cfg)
    rows = census(qp, args.algebraic, args.classes, cfg.degree_bound_for(qp))
    if args.table:
        io.print_table(table(rows), output=sys.stdout)
    else:
        io.print_lines(rows)
    if any(r.get("algebraic", True) is None for r in rows):
        return 2
    return 0 if rows else 1
