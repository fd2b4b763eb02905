import pytest

from fanocone.cones import (
    HALF_LINE,
    SIMPLICIAL,
    TWO_RAYS,
    UNKNOWN,
    BettiData,
    ConeReport,
    GeneralizedFlag,
    cone_report,
    homogeneous_betti,
)
from fanocone.grassmann import GrassmannSpace
from fanocone.isotropic import IsotropicSpace


@pytest.mark.parametrize(
    "space, k, rays",
    [
        (GrassmannSpace(2, 5), 2, 2),
        (GrassmannSpace(2, 5), 3, 2),
        (IsotropicSpace.orthogonal(5, 10), 2, 1),
        (IsotropicSpace.orthogonal(5, 10), 3, 2),
        (IsotropicSpace.symplectic(3, 6), 2, 1),
        (GeneralizedFlag("G", 2, frozenset({2})), 2, 1),
    ],
    ids=str,
)
def test_homogeneous_reports(space, k, rays):
    rep = cone_report(space, k)
    assert rep.verdict == SIMPLICIAL and rep.rays == rays and rep.rank_bound == rays
    assert rep.justification


def test_betti_rules():
    assert cone_report(BettiData("X", 1), 2).verdict == HALF_LINE
    assert cone_report(BettiData("X", 2), 3).verdict == TWO_RAYS
    assert cone_report(BettiData("X", 5), 2).verdict == UNKNOWN


def test_report_invariants():
    with pytest.raises(ValueError):
        ConeReport(2, HALF_LINE, 1, ())
    with pytest.raises(ValueError):
        ConeReport(3, TWO_RAYS, None, ())


def test_out_of_range_k():
    assert cone_report(GrassmannSpace(2, 5), 9).verdict == UNKNOWN


def test_g2_flag_betti():
    assert homogeneous_betti(GeneralizedFlag("G", 2, frozenset({2}))) == (1,) * 6
    assert str(GeneralizedFlag("G", 2, frozenset({2}))) == "G2/P2"
