"""
Exhaustive enumeration of canonical cones and the pruned search for simulacra.

A cone of dimension d is built from a prefix, a multiset of matrix factors taken in
descending dimension, and a partition of the dimension left over into Lorentz factors.
The search walks the prefixes and, for each one, asks the partition engine only for the
partitions whose Lorentz ranks make up the missing rank. Two facts bound every prefix:
among cones of a fixed dimension the orthant has the smallest rank and the Lorentz cone the
largest, and both bounds only get tighter as matrix factors are added.
"""

import logging
import os
from typing import Iterator, List, Optional, Tuple

from joblib import Parallel, delayed

from cones.factory import lorentz
from cones.models import (Cone, Factor, FactorKind, NONLORENTZ_KINDS, Relation, canonical_order, factor_dim,
                          lorentz_rank, relation)
from constants.common import CONDITION3_MIN_N, JOBS_ENV, OCTONION_DIM, OCTONION_SIZE, MATRIX_CANONICAL_MIN
from exceptions import InvalidInput
from partitions import PartitionConstraints, partitions
from search.models import ConditionReport, SearchPolicy

log = logging.getLogger(__name__)

Prefix = Tuple[Factor, ...]


def nonlorentz_factors_up_to(d: int, kinds=NONLORENTZ_KINDS) -> List[Factor]:
    """ Canonical matrix factors of dimension at most `d`, largest first """
    found = []
    for kind in kinds:
        if kind is FactorKind.OCTONION_PSD:
            if OCTONION_DIM <= d:
                found.append(Factor(kind, OCTONION_SIZE))
            continue
        n = MATRIX_CANONICAL_MIN
        while factor_dim(Factor(kind, n)) <= d:
            found.append(Factor(kind, n))
            n += 1
    return sorted(found, key=lambda f: f.sort_key, reverse=True)


def irreducible_signature_clashes(max_dim: int) -> List[Tuple[Factor, Factor]]:
    """ Pairs of distinct canonical irreducible factors of dimension <= `max_dim` sharing a signature """
    factors = [Factor(FactorKind.LORENTZ, n) for n in range(1, max_dim + 1) if n != 2]
    factors += nonlorentz_factors_up_to(max_dim)
    seen = {}
    clashes = []
    for factor in factors:
        key = (factor.dim, factor.rank)
        if key in seen:
            clashes.append((seen[key], factor))
        else:
            seen[key] = factor
    return clashes


def irreducible_signature_injective(max_dim: int) -> bool:
    return not irreducible_signature_clashes(max_dim)


def lorentz_split_gap(n: int, k: int) -> int:
    """ Rank lost by splitting L^n into L^k + L^(n-k); equals k(n-k) - 1 for 0 < k < n """
    return lorentz_rank(n) - lorentz_rank(k) - lorentz_rank(n - k)


def default_jobs() -> int:
    """ Worker count from the SIMULACRA_JOBS environment variable, 1 when it is not set """
    value = os.environ.get(JOBS_ENV, '1')
    try:
        return int(value)
    except ValueError:
        raise InvalidInput(f"{JOBS_ENV} must be an integer, got {value!r}")


class SimulacraSearch:
    """
    SimulacraSearch enumerates the canonical cones a `SearchPolicy` admits and looks for
    simulacra among them. Searches are split by prefix; with `n_jobs` other than 1 the
    prefixes are searched by joblib workers. Results are put in canonical order before
    `max_results` cuts them, so the outcome does not depend on the number of workers.
    """

    policy: SearchPolicy = None
    n_jobs: int = None

    def __init__(self, policy: SearchPolicy = None, n_jobs: Optional[int] = None) -> None:
        self.policy = policy or SearchPolicy.full()
        self.n_jobs = default_jobs() if n_jobs is None else n_jobs

    def enumerate(self, d: int) -> Iterator[Cone]:
        candidates = nonlorentz_factors_up_to(d, self.policy.nonlorentz_kinds)
        for prefix in self._prefixes(candidates, d):
            prefix_dim = sum(f.dim for f in prefix)
            for parts in partitions(self._constraints(d - prefix_dim)):
                yield _assemble(prefix, parts)

    def find(self, target: Cone) -> List[Cone]:
        """ All simulacra of `target` in canonical order, cut to the policy's `max_results` """
        prefixes = self._target_prefixes(target)
        log.debug("Searching %d prefixes for simulacra of %r", len(prefixes), target)
        if self.n_jobs == 1 or len(prefixes) < 2:
            batches = [_search_prefix(target, prefix, self.policy) for prefix in prefixes]
        else:
            batches = Parallel(n_jobs=self.n_jobs)(
                delayed(_search_prefix)(target, prefix, self.policy) for prefix in prefixes)
        found = canonical_order(cone for batch in batches for cone in batch)
        if self.policy.max_results is not None:
            found = found[:self.policy.max_results]
        return found

    def first(self, target: Cone) -> Optional[Cone]:
        """ Some simulacrum of `target`, the scan stops at the first prefix that has one """
        for prefix in self._target_prefixes(target):
            found = _search_prefix(target, prefix, self.policy, stop_at_first=True)
            if found:
                return found[0]
        return None

    def _target_prefixes(self, target: Cone) -> List[Prefix]:
        if target.dim == 0:
            return []
        candidates = nonlorentz_factors_up_to(target.dim, self.policy.nonlorentz_kinds)
        return list(self._prefixes(candidates, target.dim, target.rank))

    def _constraints(self, total: int, weight_target: Optional[int] = None) -> PartitionConstraints:
        return PartitionConstraints(
            total,
            min_part=self.policy.min_lorentz_part,
            max_part=self.policy.max_lorentz_part,
            skip_two=True,
            weight=lorentz_rank if weight_target is not None else None,
            weight_target=weight_target,
        )

    def _prefixes(self, candidates: List[Factor], dim: int, rank: Optional[int] = None,
                  start: int = 0, prefix: Prefix = ()) -> Iterator[Prefix]:
        """
        Matrix factor multisets of total dimension <= `dim`, each in descending order, the empty
        one first. Given a target `rank`, a prefix (and everything extending it) is dropped once
        no Lorentz remainder can reach that rank.
        """
        if rank is not None:
            left = dim - sum(f.dim for f in prefix)
            missing = rank - sum(f.rank for f in prefix)
            if missing < left or missing > lorentz_rank(left):
                return
        yield prefix
        limit = self.policy.max_nonlorentz_factors
        if limit is not None and len(prefix) >= limit:
            return
        room = dim - sum(f.dim for f in prefix)
        for i in range(start, len(candidates)):
            if candidates[i].dim <= room:
                yield from self._prefixes(candidates, dim, rank, i, prefix + (candidates[i],))


def _assemble(prefix: Prefix, parts: List[int]) -> Cone:
    return Cone(prefix + tuple(Factor(FactorKind.LORENTZ, p) for p in parts))


def _search_prefix(target: Cone, prefix: Prefix, policy: SearchPolicy, stop_at_first: bool = False) -> List[Cone]:
    left = target.dim - sum(f.dim for f in prefix)
    missing = target.rank - sum(f.rank for f in prefix)
    search = SimulacraSearch(policy, 1)
    found = []
    for parts in partitions(search._constraints(left, missing)):
        cone = _assemble(prefix, parts)
        if cone == target:
            continue
        found.append(cone)
        if stop_at_first:
            break
    log.debug("Prefix %r of %r: %d simulacra", prefix, target, len(found))
    return found


def enumerate_cones(d: int, policy: SearchPolicy = None) -> Iterator[Cone]:
    return SimulacraSearch(policy).enumerate(d)


def find_simulacra(target: Cone, policy: SearchPolicy = None, n_jobs: Optional[int] = None) -> List[Cone]:
    return SimulacraSearch(policy, n_jobs).find(target)


def has_simulacra(target: Cone, policy: SearchPolicy = None, n_jobs: Optional[int] = None) -> Optional[Cone]:
    return SimulacraSearch(policy, n_jobs).first(target)


def check_conditions(k: Cone, n: int) -> ConditionReport:
    return ConditionReport(
        c1=n >= 2 + k.rank - k.dim,
        c2=n >= 2 + lorentz_rank(1 + k.dim) - k.rank,
        c3=n >= CONDITION3_MIN_N,
        n_gt_2dimK=n > 2 * k.dim,
    )


def subproblem_reduction_violations(k: Cone, n: int, policy: SearchPolicy = None,
                                    n_jobs: Optional[int] = None) -> List[Cone]:
    """
    Simulacra J of K + L^n that do not arise as J' + L^n with J' a simulacrum of K.
    """
    policy = (policy or SearchPolicy.full()).with_max_results(None)
    summand = lorentz(n)
    violations = []
    for j in find_simulacra(k + summand, policy, n_jobs):
        if not j.contains(summand) or relation(j.without(summand), k) is not Relation.SIMULACRA:
            violations.append(j)
    return violations


def verify_subproblem_reduction(k: Cone, n: int, policy: SearchPolicy = None, n_jobs: Optional[int] = None) -> bool:
    return not subproblem_reduction_violations(k, n, policy, n_jobs)
