"""
Closed-form simulacra.

Each function returns a cone sharing the signature of a named target while differing from
it as a multiset of factors. Parameters outside the range where that holds raise
`InvalidInput`.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from cones.factory import complex_psd, lorentz, lorentz_sum, orthant
from cones.models import Cone, Factor, FactorKind, direct_sum
from constants.common import BOUNDARY_MIN_M, LNLN_FORMULA_MIN_N
from exceptions import InvalidInput


def simulacrum_real_psd(n: int) -> Cone:
    if n < 3:
        raise InvalidInput(f"H{n}(R) has no simulacrum of this form for n < 3")
    return lorentz(n + 1) + orthant((n * n - n - 2) // 2)


def simulacrum_complex_psd(n: int) -> Cone:
    if n < 4:
        raise InvalidInput(f"H{n}(C) has no simulacrum of this form for n < 4")
    return direct_sum([
        lorentz_sum([n + 1, n + 1, 4] + [3] * (n - 4)),
        orthant(n * n - 5 * n + 6),
    ])


def simulacrum_quaternion_psd(n: int) -> Cone:
    if n < 3:
        raise InvalidInput(f"H{n}(H) has no simulacrum of this form for n < 3")
    return lorentz(2 * n + 2) + orthant(2 * n * n - 3 * n - 2)


def simulacrum_octonion_psd() -> Cone:
    return lorentz_sum([11, 5, 3]) + orthant(8)


def simulacrum_double_complex() -> Cone:
    """ All-Lorentz cone with the signature of two copies of H3(C) """
    return lorentz_sum([7, 3]) + orthant(8)


def simulacrum_real_psd_via_complex(n: int) -> Cone:
    """ H5(R) and H6(R) share their signatures with sums around a single H3(C) """
    if n == 5:
        return complex_psd(3) + lorentz_sum([3, 3])
    if n == 6:
        return complex_psd(3) + lorentz_sum([4, 4, 3, 1])
    raise InvalidInput(f"No simulacrum of H{n}(R) around H3(C) is known, only n = 5 and n = 6")


def non_uniqueness_example() -> Tuple[Cone, Cone]:
    """ Two all-Lorentz cones sharing a signature: L4 + 3*L3 and L5 + R8 """
    return lorentz_sum([4, 3, 3, 3]), lorentz(5) + orthant(8)


def _lorentz_replacement(factor: Factor) -> Optional[Cone]:
    if factor.kind is FactorKind.LORENTZ:
        return Cone((factor,))
    if factor.kind is FactorKind.REAL_PSD:
        return simulacrum_real_psd(factor.n)
    if factor.kind is FactorKind.COMPLEX_PSD:
        return simulacrum_complex_psd(factor.n) if factor.n >= 4 else None
    if factor.kind is FactorKind.QUATERNION_PSD:
        return simulacrum_quaternion_psd(factor.n)
    return simulacrum_octonion_psd()


def lorentzify(cone: Cone) -> Optional[Cone]:
    """
    Replace every matrix factor of `cone` by an all-Lorentz cone of the same signature.

    :return: None when `cone` contains H3(C), which no sum of Lorentz cones matches
    """
    replaced: List[Cone] = []
    for factor in cone:
        replacement = _lorentz_replacement(factor)
        if replacement is None:
            return None
        replaced.append(replacement)
    return direct_sum(replaced)


def two_families_form(cone: Cone) -> Cone:
    """
    A cone of the form a*H3(C) + L^n1 + ... + L^nk with a in {0, 1} sharing the signature of `cone`.

    Every matrix factor other than H3(C) is replaced by its all-Lorentz simulacrum and pairs of
    H3(C) factors by the all-Lorentz simulacrum of their sum.
    """
    h3c = Factor(FactorKind.COMPLEX_PSD, 3)
    pairs, single = divmod(cone.count(h3c), 2)
    replaced = [complex_psd(3)] * single + [simulacrum_double_complex()] * pairs
    replaced += [_lorentz_replacement(f) for f in cone if f != h3c]
    return direct_sum(replaced)


def is_two_families_form(cone: Cone) -> bool:
    matrix = cone.nonlorentz_factors
    return not matrix or matrix == (Factor(FactorKind.COMPLEX_PSD, 3),)


@dataclass(frozen=True)
class BigLnLnParams:
    """
    Parameters of the closed-form simulacrum of L^n + L^n for n >= 100, written n = 5m + k.

    `r` is the remainder of m - k^2 + 1 modulo 3 and makes `alpha` and `gamma` integral.
    """
    n: int
    m: int
    k: int
    r: int
    alpha: int
    gamma: int

    @classmethod
    def from_n(cls, n: int) -> 'BigLnLnParams':
        if n < LNLN_FORMULA_MIN_N:
            raise InvalidInput(f"The closed form for L^n + L^n needs n >= {LNLN_FORMULA_MIN_N}, got {n}")
        m, k = divmod(n, 5)
        r = (m - k * k + 1) % 3
        alpha, alpha_rest = divmod(m - 4 * k * k + 15 * k - 14 - r, 3)
        gamma_part, gamma_rest = divmod(4 * m - 16 * k * k - 68 + 5 * r, 3)
        if alpha_rest or gamma_rest:
            raise InvalidInput(f"Parameters for n = {n} are not integral")
        gamma = 2 * m - 22 * k - gamma_part
        if alpha < 0 or gamma < 0:
            raise InvalidInput(f"Parameters for n = {n} are negative: alpha={alpha}, gamma={gamma}")
        return cls(n, m, k, r, alpha, gamma)

    @property
    def largest_part(self) -> int:
        return 7 * self.m + self.k

    def cone(self) -> Cone:
        parts = [self.largest_part, self.m + 3 * self.k - 4] + [4] * self.alpha + [3] * self.r
        return lorentz_sum(parts) + orthant(self.gamma)


def big_lnln_simulacrum(n: int) -> Cone:
    return BigLnLnParams.from_n(n).cone()


def condition1_boundary_counterexample(m: int) -> Tuple[int, Cone, Cone]:
    """
    For K = L^m take n one below the first condition's bound, n = 1 + rank(K) - dim(K).
    Then K + L^n and R^(m-1) + L^(n+1) share a signature.

    :return: n and both cones
    """
    if m < BOUNDARY_MIN_M:
        raise InvalidInput(f"The boundary family starts at m = {BOUNDARY_MIN_M}, got {m}")
    k = lorentz(m)
    n = 1 + k.rank - k.dim
    return n, k + lorentz(n), orthant(m - 1) + lorentz(n + 1)


def condition2_boundary_counterexample() -> Tuple[int, Cone, Cone]:
    """ K = H3(C) with n on the second condition's bound minus one: H3(C) + L30 and L29 + L10 """
    return 30, complex_psd(3) + lorentz(30), lorentz_sum([29, 10])


def octonion_two_forms() -> Tuple[Cone, Cone]:
    """ Two different all-Lorentz simulacra of H3(O), trading L5 + R8 for L4 + 3*L3 """
    first = simulacrum_octonion_psd()
    small, other = non_uniqueness_example()
    return first, first.without(other) + small
