from functools import lru_cache
from typing import List, Optional, Tuple

from cones.models import Cone, Relation, relation
from cones.parser import parse_cone
from constants.common import NO_CACHE, TABLE_B_SEARCH_LIMIT, TABLE_MAX_N
from search.engine import find_simulacra
from search.models import SearchPolicy
from verification import claims, tables
from verification.models import Report


@lru_cache(maxsize=0 if NO_CACHE else 256)
def get_cone(expression: str) -> Cone:
    return parse_cone(expression)


def get_relation(expression_a: str, expression_b: str) -> Tuple[Cone, Cone, Relation]:
    a, b = get_cone(expression_a), get_cone(expression_b)
    return a, b, relation(a, b)


@lru_cache(maxsize=0 if NO_CACHE else 64)
def get_simulacra(expression: str, policy: SearchPolicy, n_jobs: Optional[int] = None) -> List[Cone]:
    return find_simulacra(get_cone(expression), policy, n_jobs)


@lru_cache(maxsize=0 if NO_CACHE else 32)
def get_report(claim_id: str, n_jobs: Optional[int] = None) -> Report:
    return claims.verify(claim_id, n_jobs)


@lru_cache(maxsize=0 if NO_CACHE else 16)
def get_table(which: str, fmt: str, max_n: int = TABLE_MAX_N, search_limit: int = TABLE_B_SEARCH_LIMIT,
              n_jobs: Optional[int] = None) -> str:
    return tables.render(tables.generate(which, max_n, search_limit, n_jobs), fmt)
