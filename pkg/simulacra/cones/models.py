from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from operator import attrgetter
from typing import Iterable, List, Optional, Tuple

from constants.common import (KIND_LORENTZ, KIND_REAL_PSD, KIND_COMPLEX_PSD, KIND_QUATERNION_PSD,
                              KIND_OCTONION_PSD, KIND_ORDER, FIELD_DIMENSION, MATRIX_CANONICAL_MIN,
                              OCTONION_SIZE, OCTONION_RANK)
from exceptions import InvalidInput, NotCanonical


class FactorKind(Enum):
    LORENTZ = KIND_LORENTZ
    REAL_PSD = KIND_REAL_PSD
    COMPLEX_PSD = KIND_COMPLEX_PSD
    QUATERNION_PSD = KIND_QUATERNION_PSD
    OCTONION_PSD = KIND_OCTONION_PSD

    @property
    def order(self) -> int:
        return KIND_ORDER.index(self.value)

    @property
    def is_matrix(self) -> bool:
        return self is not FactorKind.LORENTZ

    @property
    def field_dimension(self) -> int:
        return FIELD_DIMENSION[self.value]


NONLORENTZ_KINDS = frozenset(k for k in FactorKind if k.is_matrix)


def lorentz_rank(n: int) -> int:
    """
    Lyapunov rank of the n-dimensional Lorentz cone, with the trivial cone mapped to zero.

    This is the function f in f(x) + f(y) <= f(x + y); for n >= 1 it equals (n^2 - n + 2) / 2.
    """
    if n == 0:
        return 0
    return (n * n - n + 2) // 2


@dataclass(frozen=True)
class Factor:
    """
    A single irreducible building block: a Lorentz cone of dimension `n` or the cone of
    `n` x `n` positive semidefinite Hermitian matrices over one of R, C, H or O.

    Any `n` >= 0 is accepted so that raw input can be represented; `is_canonical` tells
    whether the factor is in the range where the families are distinct, e.g.

      Factor(LORENTZ, 2)   - not canonical, same cone as two Lorentz 1 factors
      Factor(REAL_PSD, 2)  - not canonical, same cone as Lorentz 3
      Factor(REAL_PSD, 3)  - canonical
    """
    kind: FactorKind
    n: int

    def __post_init__(self):
        if not isinstance(self.kind, FactorKind):
            raise InvalidInput(f"Unknown factor kind {self.kind!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise InvalidInput(f"Factor size must be a nonnegative integer, got {self.n!r}")

    @cached_property
    def dim(self) -> int:
        return factor_dim(self)

    @cached_property
    def rank(self) -> int:
        return factor_rank(self)

    @property
    def is_lorentz(self) -> bool:
        return self.kind is FactorKind.LORENTZ

    @cached_property
    def is_canonical(self) -> bool:
        if self.kind is FactorKind.LORENTZ:
            return self.n == 1 or self.n >= 3
        if self.kind is FactorKind.OCTONION_PSD:
            return self.n == OCTONION_SIZE
        return self.n >= MATRIX_CANONICAL_MIN

    @cached_property
    def sort_key(self) -> Tuple[int, int, int]:
        return self.dim, self.kind.order, self.n

    def __repr__(self):
        return f"<{self.kind.value} {self.n}>"


def factor_dim(factor: Factor) -> int:
    """
    Dimension of a (possibly non-canonical) factor. The matrix families share one formula:
    n diagonal real entries plus one field element for each of the n(n-1)/2 pairs above it.
    """
    if factor.kind is FactorKind.LORENTZ:
        return factor.n
    n = factor.n
    return n + factor.kind.field_dimension * n * (n - 1) // 2


def factor_rank(factor: Factor) -> int:
    """
    Lyapunov rank of a canonical factor.

    :raises NotCanonical: outside the canonical ranges the closed forms give wrong answers
                          (e.g. for the trivial Lorentz cone or the 1x1 quaternion matrices),
                          so the factor has to be canonicalized first
    """
    if not factor.is_canonical:
        raise NotCanonical(f"Factor {factor!r} is not canonical; canonicalize it first")
    n = factor.n
    if factor.kind is FactorKind.LORENTZ:
        return lorentz_rank(n)
    if factor.kind is FactorKind.REAL_PSD:
        return n * n
    if factor.kind is FactorKind.COMPLEX_PSD:
        return 2 * n * n - 1
    if factor.kind is FactorKind.QUATERNION_PSD:
        return 4 * n * n
    return OCTONION_RANK


@dataclass(frozen=True)
class Signature:
    dim: int
    rank: int

    def __add__(self, other: 'Signature') -> 'Signature':
        return Signature(self.dim + other.dim, self.rank + other.rank)

    def as_tuple(self) -> Tuple[int, int]:
        return self.dim, self.rank

    def __str__(self):
        return f"({self.dim}, {self.rank})"


@dataclass(frozen=True)
class Cone:
    """
    A symmetric cone as the multiset of its canonical irreducible factors.

    Factors are kept in a fixed total order: descending by dimension, then by kind order
    (Lorentz < RealPSD < ComplexPSD < QuaternionPSD < OctonionPSD), then by size. Two cones
    are therefore equal exactly when they are isomorphic. The empty cone is the trivial cone.
    Use `cones.factory.canonicalize` to build a cone out of raw factors.
    """
    factors: Tuple[Factor, ...] = ()

    def __post_init__(self):
        factors = tuple(self.factors)
        for factor in factors:
            if not isinstance(factor, Factor):
                raise InvalidInput(f"Cone factors must be Factor instances, got {factor!r}")
            if not factor.is_canonical:
                raise NotCanonical(f"Factor {factor!r} is not canonical; canonicalize it first")
        object.__setattr__(self, 'factors', _in_cone_order(factors))

    @classmethod
    def from_ordered(cls, factors: Tuple[Factor, ...], signature: Optional[Signature] = None) -> 'Cone':
        """
        Wrap canonical factors that are already in cone order, skipping the checks. Meant for
        factors taken from other cones; a known `signature` is stored as is.
        """
        cone = cls.__new__(cls)
        object.__setattr__(cone, 'factors', factors)
        if signature is not None:
            cone.__dict__['signature'] = signature
        return cone

    @cached_property
    def signature(self) -> Signature:
        return Signature(sum(f.dim for f in self.factors), sum(f.rank for f in self.factors))

    @property
    def dim(self) -> int:
        return self.signature.dim

    @property
    def rank(self) -> int:
        return self.signature.rank

    @property
    def sort_key(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(f.sort_key for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    @property
    def lorentz_only(self) -> bool:
        return all(f.is_lorentz for f in self.factors)

    @property
    def lorentz_parts(self) -> List[int]:
        """ Sizes of the Lorentz factors in ascending order, i.e. a partition of their total dimension """
        return sorted(f.n for f in self.factors if f.is_lorentz)

    @property
    def nonlorentz_factors(self) -> Tuple[Factor, ...]:
        return tuple(f for f in self.factors if not f.is_lorentz)

    def count(self, factor: Factor) -> int:
        return self.factors.count(factor)

    def contains(self, other: 'Cone') -> bool:
        mine = Counter(self.factors)
        return all(mine[f] >= c for f, c in Counter(other.factors).items())

    def without(self, other: 'Cone') -> 'Cone':
        """ Multiset difference; `other` has to be a sub-multiset of this cone """
        if not self.contains(other):
            raise InvalidInput(f"{other!r} is not a summand of {self!r}")
        remaining = Counter(self.factors)
        remaining.subtract(other.factors)
        return Cone(tuple(remaining.elements()))

    def __add__(self, other: 'Cone') -> 'Cone':
        return direct_sum((self, other))

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        return "Cone{" + ", ".join(f"{f.kind.value} {f.n}" for f in self.factors) + "}"


def direct_sum(cones: Iterable[Cone]) -> Cone:
    factors: List[Factor] = []
    total = Signature(0, 0)
    for cone in cones:
        factors += cone.factors
        total += cone.signature
    return Cone.from_ordered(_in_cone_order(factors), total)


def _in_cone_order(factors: Iterable[Factor]) -> Tuple[Factor, ...]:
    # descending runs from other cones are merged in linear time
    return tuple(sorted(factors, key=attrgetter('sort_key'), reverse=True))


def canonical_order(cones: Iterable[Cone]) -> List[Cone]:
    """ Deterministic ordering for search results: cones with larger leading factors first """
    return sorted(cones, key=lambda c: c.sort_key, reverse=True)


class Relation(Enum):
    ISOMORPHIC = 'Isomorphic'
    SIMULACRA = 'Simulacra'
    DISTINCT = 'Distinct'

    def __str__(self):
        return self.value


def signature(cone: Cone) -> Signature:
    return cone.signature


def relation(a: Cone, b: Cone) -> Relation:
    if a == b:
        return Relation.ISOMORPHIC
    if a.signature == b.signature:
        return Relation.SIMULACRA
    return Relation.DISTINCT
