import logging
from typing import Iterable, List

from cones.models import Cone, Factor, FactorKind, Signature
from cones.rules import rules, LORENTZ_1
from exceptions import InvalidInput

log = logging.getLogger(__name__)


class ConeFactory:
    """
    ConeFactory turns raw factor lists into canonical `cones.models.Cone` objects by applying
    `cones.rules.*` to each factor.
    """

    def create(self, raw: Iterable[Factor]) -> Cone:
        canonical: List[Factor] = []
        for factor in raw:
            canonical.extend(self._apply_rules(factor))
        return Cone(tuple(canonical))

    @staticmethod
    def _apply_rules(factor: Factor) -> List[Factor]:
        for rule in rules:
            results = rule(factor)
            if results is None:
                continue
            log.debug("Rewrote %r as %r by %s", factor, results, rule.__name__)
            return results
        return [factor]


def canonicalize(raw: Iterable[Factor]) -> Cone:
    return ConeFactory().create(raw)


def orthant(n: int) -> Cone:
    """ The nonnegative orthant R^n_+, i.e. n copies of the half-line L^1 """
    if n < 0:
        raise InvalidInput(f"Orthant dimension must be nonnegative, got {n}")
    return Cone.from_ordered((LORENTZ_1,) * n, Signature(n, n))


def lorentz(n: int) -> Cone:
    """ The n-dimensional Lorentz cone as a canonical cone (L^0 is trivial, L^2 is R^2) """
    return canonicalize([Factor(FactorKind.LORENTZ, n)])


def real_psd(n: int) -> Cone:
    return canonicalize([Factor(FactorKind.REAL_PSD, n)])


def complex_psd(n: int) -> Cone:
    return canonicalize([Factor(FactorKind.COMPLEX_PSD, n)])


def quaternion_psd(n: int) -> Cone:
    return canonicalize([Factor(FactorKind.QUATERNION_PSD, n)])


def octonion_psd(n: int = 3) -> Cone:
    return canonicalize([Factor(FactorKind.OCTONION_PSD, n)])


def lorentz_sum(parts: Iterable[int]) -> Cone:
    """ Direct sum of Lorentz cones with the given dimensions, e.g. a witness partition for L^n + L^n """
    return canonicalize([Factor(FactorKind.LORENTZ, p) for p in parts])
