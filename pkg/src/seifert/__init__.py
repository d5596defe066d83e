"""Bigraded GF(2) cohomology of forests, spectral sequences, Alexander
polynomials and the combinatorial Heegaard-Floer comparison."""

from .forest import (Forest, ForestError, Matching, disjoint_union, dynkin,
                     enumerate_matchings, parse_forest, path,
                     perfect_matching, relabel, remove_vertices, star)
from .gf2 import Gf2Matrix, Subspace, canonical_coset_rep, kernel_basis, \
    rank, solve
from .complexes import (ChainVector, Configuration, SeifertComplex, apply_D,
                        apply_d, cohomology_basis, cohomology_dims,
                        config_count, differential_matrix, enumerate_configs,
                        poincare_polynomial)
from .poly import BiPolynomial, IntPolynomial
from .alexander import (alexander_det, alexander_euler, alexander_matchings,
                        alexander_recursive, monodromy, monodromy_char_poly,
                        seifert_matrix)
from .spectral import (K2Generator, K2Operator, SpectralPage,
                       SpectralSequence, ZigzagClass, d1_on_sh, d2_zigzag,
                       k2_cohomology, k2_operator, limit_dim, page_dims)
from .hf import (ComparisonReport, GapSequence, HfMinusSeries, LinkError,
                 RecipeError, compare_report, gap_exponents, hf_hat_poly,
                 hf_minus_poly)
from .checks import run_all

__version__ = "0.1.0"
