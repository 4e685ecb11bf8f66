# qpkit.__init__


"""qpkit: exact computation with quivers with potential

Jacobian algebras, cuts and truncated Jacobian algebras, selfinjectivity,
QP mutation, coverings, canvases and planar QPs.
"""


try:
    from ._version import version
except ImportError:
    version = "0.0.0+unknown"

from .quiver import Quiver, Arrow, Path, CyclicWord
from .potential import AlgebraElement, Potential
from .qp import QP, parse_qp, serialize_qp
from .mutation import mutate, orbit_mutate
from .selfinjective import is_selfinjective
from .cuts import enumerate_cuts
