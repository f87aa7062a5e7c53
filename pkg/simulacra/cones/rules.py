# -*- coding: utf-8 -*-

"""
Rules rewriting raw factors into canonical ones.

Each rule accepts a single raw `Factor` and returns either None, when it does not apply,
or the list of canonical factors the raw one is Jordan-isomorphic to (an empty list means
the factor is the trivial cone). Rules are tried in order and the first one that applies wins;
a factor no rule applies to is already canonical.

The identifications:
  L^0, H_0(F)       - trivial cone, dropped
  L^2               - L^1 + L^1, all two-dimensional symmetric cones being isomorphic
  H_1(F)            - L^1, the half-line
  H_2(F)            - Lorentz cone of dimension 2 + dim_R(F): L^3, L^4, L^6 or L^10
"""

from typing import List, Optional

from cones.models import Factor, FactorKind, factor_dim
from constants.common import OCTONION_SIZE
from exceptions import CanonicalizationError

LORENTZ_1 = Factor(FactorKind.LORENTZ, 1)


def rule_octonion_too_big(factor: Factor) -> Optional[List[Factor]]:
    # There is no Euclidean Jordan algebra of 4x4 or larger octonion matrices
    if factor.kind is FactorKind.OCTONION_PSD and factor.n > OCTONION_SIZE:
        raise CanonicalizationError(f"No cone of {factor.n}x{factor.n} octonion matrices exists")


def rule_trivial(factor: Factor) -> Optional[List[Factor]]:
    if factor.n == 0:
        return []


def rule_lorentz_2(factor: Factor) -> Optional[List[Factor]]:
    if factor.kind is FactorKind.LORENTZ and factor.n == 2:
        return [LORENTZ_1, LORENTZ_1]


def rule_matrix_1(factor: Factor) -> Optional[List[Factor]]:
    if factor.kind.is_matrix and factor.n == 1:
        return [LORENTZ_1]


def rule_matrix_2(factor: Factor) -> Optional[List[Factor]]:
    if factor.kind.is_matrix and factor.n == 2:
        return [Factor(FactorKind.LORENTZ, factor_dim(factor))]


rules = (
    rule_octonion_too_big,
    rule_trivial,
    rule_lorentz_2,
    rule_matrix_1,
    rule_matrix_2,
)
