from loguru import logger

from .qpoly import Poly, Rat
from .ratfun import RatFun
from .hermite import hermite_list, hermite_reduction
from .dispersion import pdisp, shift_set
from .reduce import additive_decomposition, simple_reduction, simple_reduction_plus
from .residues import (
    discrete_residues,
    discrete_residues_plus,
    first_residues,
    first_residues_plus,
    residue_at_orbit,
)
from .telescope import (
    express_in_generators,
    in_wspace,
    is_summable,
    vspace_basis,
    wspace_bounded,
    wspace_generators,
)
from .galois import (
    diagonal_relations,
    exp_log_integrate,
    galois_group_lattice,
    integer_lattice,
    log_derivative,
    multiplicative_relations,
)
from .utils.expr import parse_ratfun


logger.disable(__name__)
