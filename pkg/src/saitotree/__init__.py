"""Saito dicriticity of numbered resolution trees of plane curve germs."""
from .analysis import (check_upper_bound, gluing_data, index_sums, saito_number,
                       saito_valuation_profile)
from .curves import (builtin_family, milnor_number, multiplicity_sequence,
                     tree_from_char_exponents)
from .dicriticity import (configuration, configuration_table, find_mixed_branch,
                          is_admissible, saito, saito_bruteforce, saito_inductive,
                          square_indices, theta01, theta02, theta11, white_components)
from .halfint import HalfInt
from .io import analysis_report, emit_dot, parse_tree, serialize_tree
from .kernels import BACKEND
from .moduli import blowup_root, generic_moduli_dimension, generic_tjurina, level_contribution
from .tree import (ResolutionTree, build_tree, intersection_matrix, multiplicities,
                   proximity_matrix, valuations)

__version__ = "0.1.0"
