"""Exact Schubert calculus, Betti numbers of homogeneous spaces and k-Fano tests."""

from .chern import CIVariety, Projective, WeightedProjective, chern_character_ambient, chern_character_ci
from .chern import pair_ch2_with_surface, projective_weak_kfano_test, schubert_pairings, weighted_ch2
from .classify import (
    CandidateRecord,
    enumerate_grassmann_4folds,
    enumerate_og_4folds,
    enumerate_sg_4folds,
    high_index_catalog_check,
)
from .cones import BettiData, ConeReport, GeneralizedFlag, cone_report
from .errors import DomainError, FanoconeError, SyntaxErrorInSpec
from .grassmann import (
    CohomologyClass,
    GrassmannSpace,
    intersection_number,
    poincare_dual,
    product,
    restricted_pairing,
    solve_class_from_pairings,
)
from .hodge import ChiTable, evaluate_b4_x11
from .isotropic import IsotropicSpace, betti, betti_numbers, enumerate_classes, lambda_prime, lambda_tilde
from .parsing import parse_ci, parse_class, parse_space
from .partitions import BoxShape, Partition, lr_coefficient, partitions_in_box
from .weyl import ParabolicQuotient, coxeter, duality_check, length, minimal_coset_reps, poincare_polynomial

__version__ = "0.1.0"
