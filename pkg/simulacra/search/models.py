from dataclasses import dataclass, field
from typing import FrozenSet, Optional

from cones.models import FactorKind, NONLORENTZ_KINDS
from exceptions import InvalidInput


@dataclass(frozen=True)
class SearchPolicy:
    """
    Restrictions a search or an enumeration applies to the cones it considers.

    :param allow_nonlorentz: whether matrix factors may appear at all
    :param allowed_kinds: matrix kinds that may appear when `allow_nonlorentz` is set
    :param min_lorentz_part: smallest Lorentz factor allowed
    :param max_lorentz_part: largest Lorentz factor allowed, None for unbounded
    :param max_results: keep only the first this many simulacra in canonical order, None for all of them
    :param max_nonlorentz_factors: cap on the number of matrix factors, None for unbounded
    """
    allow_nonlorentz: bool = True
    allowed_kinds: FrozenSet[FactorKind] = field(default=NONLORENTZ_KINDS)
    min_lorentz_part: int = 1
    max_lorentz_part: Optional[int] = None
    max_results: Optional[int] = None
    max_nonlorentz_factors: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'allowed_kinds', frozenset(self.allowed_kinds))
        for kind in self.allowed_kinds:
            if kind not in NONLORENTZ_KINDS:
                raise InvalidInput(f"Only matrix kinds can be allowed explicitly, got {kind!r}")
        if self.min_lorentz_part < 1:
            raise InvalidInput(f"Smallest Lorentz part has to be positive, got {self.min_lorentz_part}")
        if self.max_lorentz_part is not None:
            if self.max_lorentz_part < 1:
                raise InvalidInput(f"Largest Lorentz part has to be positive, got {self.max_lorentz_part}")
            if self.max_lorentz_part < self.min_lorentz_part:
                raise InvalidInput(f"Largest Lorentz part {self.max_lorentz_part} is below "
                                   f"the smallest one {self.min_lorentz_part}")
        if self.max_results is not None and self.max_results < 1:
            raise InvalidInput(f"Result limit has to be positive, got {self.max_results}")
        if self.max_nonlorentz_factors is not None and self.max_nonlorentz_factors < 0:
            raise InvalidInput(f"Matrix factor limit cannot be negative, got {self.max_nonlorentz_factors}")

    @classmethod
    def full(cls, **kwargs) -> 'SearchPolicy':
        return cls(**kwargs)

    @classmethod
    def lorentz_only(cls, **kwargs) -> 'SearchPolicy':
        return cls(allow_nonlorentz=False, **kwargs)

    @property
    def nonlorentz_kinds(self) -> FrozenSet[FactorKind]:
        return self.allowed_kinds if self.allow_nonlorentz else frozenset()

    def with_max_results(self, max_results: Optional[int]) -> 'SearchPolicy':
        return SearchPolicy(self.allow_nonlorentz, self.allowed_kinds, self.min_lorentz_part,
                            self.max_lorentz_part, max_results, self.max_nonlorentz_factors)


@dataclass(frozen=True)
class ConditionReport:
    """
    The three conditions on n under which simulacra of K + L^n come from simulacra of K,
    plus the size bound c1, c2 and c3 together imply.
    """
    c1: bool
    c2: bool
    c3: bool
    n_gt_2dimK: bool

    @property
    def all_hold(self) -> bool:
        return self.c1 and self.c2 and self.c3
