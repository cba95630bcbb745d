"""Weight multiplicities of simple GL(n)-modules in odd characteristic and
composition factors of ``L(lam) (x) wedge^2 V*``.

Two independent routes are provided: recursive rank formulas
(:mod:`glwedge.rank_formulas`) and brute force through Gram matrices and
character peeling (:mod:`glwedge.gram_oracle`, :mod:`glwedge.tensor_oracle`).
"""

__version__ = "0.1.0"

from .gram_oracle import (
    Character,
    dim_simple_weight_space,
    gram_matrix,
    kostka_number,
    simple_character,
    slice_dim_11x,
)
from .linalg import BudgetExceeded, IntMatrix
from .rank_formulas import (
    MultiplicityReport,
    build_M,
    build_W,
    build_X,
    build_Y,
    closed_form_s_minus_1,
    multiplicity_main,
    t_values,
)
from .tensor_oracle import decompose, level_multiplicity, tensor_multiplicity, wedge2_dual_character
from .weights import cont, distinguished, linked, removable_indices, removable_pairs

__all__ = [
    "BudgetExceeded",
    "Character",
    "IntMatrix",
    "MultiplicityReport",
    "build_M",
    "build_W",
    "build_X",
    "build_Y",
    "closed_form_s_minus_1",
    "cont",
    "decompose",
    "dim_simple_weight_space",
    "distinguished",
    "gram_matrix",
    "kostka_number",
    "level_multiplicity",
    "linked",
    "multiplicity_main",
    "removable_indices",
    "removable_pairs",
    "simple_character",
    "slice_dim_11x",
    "t_values",
    "tensor_multiplicity",
    "wedge2_dual_character",
]
