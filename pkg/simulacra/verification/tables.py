import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional

from cones.factory import canonicalize, complex_psd, lorentz, lorentz_sum, octonion_psd, orthant
from cones.models import Factor, FactorKind, Relation, relation
from cones.parser import format_cone, format_factor, format_partition
from constants.common import (FORMAT_CSV, FORMAT_JSON, H3C_LN_SEARCH_MAX_N, H3C_WITNESS_FIXTURE, LNLN_FIXTURE_MAX_N,
                              LNLN_WITNESS_FIXTURE, TABLE_1, TABLE_2, TABLE_3, TABLE_B, TABLE_B_SEARCH_LIMIT,
                              TABLE_MAX_N, TABLE_MIN_N)
from exceptions import FixtureError, InvalidInput
from search.engine import has_simulacra
from search.models import SearchPolicy
from utils import load_h3c_witnesses, load_lnln_witnesses

log = logging.getLogger(__name__)

Row = Dict[str, Any]

BUILDING_BLOCKS = (FactorKind.LORENTZ, FactorKind.REAL_PSD, FactorKind.COMPLEX_PSD, FactorKind.QUATERNION_PSD)


def table_1(max_n: int = TABLE_MAX_N) -> List[Row]:
    """ Signatures of the building blocks for 2 <= n <= max_n, plus H3(O) """
    rows = []
    for kind in BUILDING_BLOCKS:
        for n in range(TABLE_MIN_N, max_n + 1):
            factor = Factor(kind, n)
            signature = canonicalize([factor]).signature
            rows.append({"cone": format_factor(factor), "n": n, "dim": signature.dim, "rank": signature.rank})
    octonion = octonion_psd()
    rows.append({"cone": format_cone(octonion), "n": 3, "dim": octonion.dim, "rank": octonion.rank})
    return rows


def table_2(max_n: int = TABLE_MAX_N) -> List[Row]:
    """ Signatures of the orthants R^n for 0 <= n <= max_n """
    return [{"cone": f"R{n}", "n": n, "dim": orthant(n).dim, "rank": orthant(n).rank} for n in range(0, max_n + 1)]


def table_3(n_jobs: Optional[int] = None) -> List[Row]:
    """
    Simulacra of H3(C) + L^n for n up to the search bound, with the fixture's witnesses.

    :raises FixtureError: a listed witness is not a simulacrum, or the search finds simulacra
                          for an n the fixture does not list
    """
    listed = {}
    for line_no, row in enumerate(load_h3c_witnesses(), 1):
        target = complex_psd(3) + lorentz(row['n'])
        if relation(row['cone'], target) is not Relation.SIMULACRA:
            raise FixtureError(f"{row['witness']} is not a simulacrum of {format_cone(target)}",
                               H3C_WITNESS_FIXTURE, line_no)
        listed[row['n']] = row['cone']
    rows = []
    for n in range(1, H3C_LN_SEARCH_MAX_N + 1):
        target = complex_psd(3) + lorentz(n)
        if n not in listed:
            found = has_simulacra(target, SearchPolicy.full(), n_jobs)
            if found is not None:
                raise FixtureError(f"No witness listed for n={n}, the search finds {format_cone(found)}",
                                   H3C_WITNESS_FIXTURE)
            continue
        rows.append({"n": n, "dim": target.dim, "rank": target.rank, "witness": format_cone(listed[n])})
    return rows


def table_b(search_limit: int = TABLE_B_SEARCH_LIMIT, n_jobs: Optional[int] = None) -> List[Row]:
    """
    Simulacra of L^n + L^n as Lorentz partitions of 2n. Every fixture row is validated; rows with
    n up to `search_limit` also carry the partition an all-Lorentz search finds.

    :raises FixtureError: a listed partition is not a simulacrum of L^n + L^n
    """
    rows = []
    for n, parts in sorted(load_lnln_witnesses().items()):
        if n > LNLN_FIXTURE_MAX_N:
            continue
        target = lorentz(n) + lorentz(n)
        row = {
            "n": n,
            "partition": format_partition(parts),
            "valid": relation(lorentz_sum(parts), target) is Relation.SIMULACRA,
            "found": None,
        }
        if not row["valid"]:
            raise FixtureError(f"{row['partition']} is not a simulacrum of L{n} + L{n}", LNLN_WITNESS_FIXTURE)
        if n <= search_limit:
            found = has_simulacra(target, SearchPolicy.lorentz_only(), n_jobs)
            row["found"] = format_partition(found.lorentz_parts) if found is not None else None
        rows.append(row)
    return rows


def generate(which: str, max_n: int = TABLE_MAX_N, search_limit: int = TABLE_B_SEARCH_LIMIT,
             n_jobs: Optional[int] = None) -> List[Row]:
    if which == TABLE_1:
        return table_1(max_n)
    if which == TABLE_2:
        return table_2(max_n)
    if which == TABLE_3:
        return table_3(n_jobs)
    if which == TABLE_B:
        return table_b(search_limit, n_jobs)
    raise InvalidInput(f"Unknown table `{which}`")


def render(rows: List[Row], fmt: str) -> str:
    if fmt == FORMAT_JSON:
        return json.dumps(rows, indent=2)
    if fmt == FORMAT_CSV:
        if not rows:
            return ''
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
        return out.getvalue()
    raise InvalidInput(f"Unknown format `{fmt}`")
