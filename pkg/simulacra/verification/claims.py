"""
Verification routines, one per claim id.

Each routine fills a `Report` with records. A record compares what is expected with what was
computed, and every witness a search or construction produced is checked again through
`cones.models.relation` before it counts.
"""

import logging
import time
from functools import wraps
from typing import Callable, Dict, Iterable, Optional

from cones.factory import canonicalize, complex_psd, lorentz, lorentz_sum, octonion_psd, orthant, quaternion_psd, \
    real_psd
from cones.models import Cone, Factor, FactorKind, Relation, Signature, lorentz_rank, relation
from cones.parser import format_cone, parse_cone
from constants.common import (BOUNDARY_MAX_M, BOUNDARY_MIN_M, CLAIMS, CLAIM_BOUNDARY_COUNTEREXAMPLES,
                              CLAIM_COMPLEX_PSD, CLAIM_COMPLEX_PSD_3_NONE, CLAIM_DOUBLE_COMPLEX,
                              CLAIM_H2_CONSISTENCY, CLAIM_LMLN, CLAIM_LNLN_APPENDIX_B, CLAIM_LNLN_EXHAUSTIVE,
                              CLAIM_LNLN_FORMULA, CLAIM_LORENTZ_NO_SIMULACRA, CLAIM_OCTONION_PSD,
                              CLAIM_QUATERNION_PSD, CLAIM_REAL_PSD, CLAIM_TABLE1, CLAIM_TABLE2, CLAIM_TABLE3,
                              CLAIM_THM4_REGION, CLAIM_TWO_FAMILIES, CONSTRUCTION_MAX_N, H3C_LN_SEARCH_MAX_N,
                              H3C_LN_SIMULACRA, LMLN_MAX_M, LMLN_N_SPAN, LNLN_EXHAUSTIVE_MAX_N, LNLN_FIXTURE_MAX_N,
                              LNLN_FORMULA_MAX_N, LNLN_FORMULA_MIN_N, LNLN_NO_SIMULACRA, LORENTZ_SEARCH_MAX_N,
                              SUBPROBLEM_EXCLUDED_DIMS, SUBPROBLEM_EXCLUDED_N, SUBPROBLEM_REGION, TABLE_MAX_N,
                              TABLE_MIN_N, TWO_FAMILIES_MAX_DIM)
from constructions import (BigLnLnParams, condition1_boundary_counterexample, condition2_boundary_counterexample,
                           is_two_families_form, non_uniqueness_example, octonion_two_forms,
                           simulacrum_complex_psd, simulacrum_double_complex, simulacrum_octonion_psd,
                           simulacrum_quaternion_psd, simulacrum_real_psd, simulacrum_real_psd_via_complex,
                           two_families_form)
from exceptions import UnknownClaim
from search.engine import (check_conditions, enumerate_cones, find_simulacra, has_simulacra,
                           irreducible_signature_clashes, subproblem_reduction_violations)
from search.models import SearchPolicy
from utils import load_h3c_witnesses, load_lnln_witnesses
from verification.models import Record, Report

log = logging.getLogger(__name__)

NONE = 'none'
FOUND = 'simulacra'
INJECTIVE = 'injective'
IRREDUCIBLE_MAX_DIM = 200

# Building block signatures as closed forms in n, valid for n >= 2
CLOSED_FORMS = {
    FactorKind.LORENTZ: lambda n: Signature(n, (n * n - n + 2) // 2),
    FactorKind.REAL_PSD: lambda n: Signature((n * n + n) // 2, n * n),
    FactorKind.COMPLEX_PSD: lambda n: Signature(n * n, 2 * n * n - 1),
    FactorKind.QUATERNION_PSD: lambda n: Signature(2 * n * n - n, 4 * n * n),
}

Routine = Callable[[Report, Optional[int]], None]

registry: Dict[str, Callable[[Optional[int]], Report]] = {}


def claim(claim_id: str):
    """ Register the decorated routine as the verification of `claim_id` """
    def decorator(routine: Routine):
        @wraps(routine)
        def inner(n_jobs: Optional[int] = None) -> Report:
            log.info("Verifying %s", claim_id)
            report = Report(claim_id)
            started = time.monotonic()
            routine(report, n_jobs)
            report.elapsed_ms = int((time.monotonic() - started) * 1000)
            log.info("%s: %s, %d records in %d ms", claim_id, report.verdict, len(report.records),
                     report.elapsed_ms)
            return report
        registry[claim_id] = inner
        return inner
    return decorator


def verify(claim_id: str, n_jobs: Optional[int] = None) -> Report:
    try:
        routine = registry[claim_id]
    except KeyError:
        raise UnknownClaim(f"Unknown claim `{claim_id}`, expected one of: {', '.join(CLAIMS)}")
    return routine(n_jobs)


def verify_all(n_jobs: Optional[int] = None) -> Iterable[Report]:
    for claim_id in CLAIMS:
        yield verify(claim_id, n_jobs)


def _simulacrum_record(target: Cone, witness: Cone, label: str = None) -> Record:
    return Record(
        input=label or format_cone(target),
        expected=f"{target.signature} {Relation.SIMULACRA}",
        actual=f"{_recomputed(witness)} {relation(witness, target)}",
        witness=format_cone(witness),
    )


def _recomputed(cone: Cone) -> Signature:
    """ Signature summed over the factors again, independent of the cached one """
    return Signature(sum(f.dim for f in cone), sum(f.rank for f in cone))


def _search_record(target: Cone, expected: str, witness: Optional[Cone], label: str = None) -> Record:
    if witness is not None and relation(witness, target) is not Relation.SIMULACRA:
        return Record(label or format_cone(target), expected, "invalid witness", format_cone(witness))
    return Record(
        input=label or format_cone(target),
        expected=expected,
        actual=NONE if witness is None else FOUND,
        witness=None if witness is None else format_cone(witness),
    )


def _listing(cones: Iterable[Cone]) -> str:
    return '; '.join(format_cone(c) for c in cones) or NONE


@claim(CLAIM_TABLE1)
def verify_table1(report: Report, n_jobs: Optional[int]) -> None:
    for kind, closed_form in CLOSED_FORMS.items():
        for n in range(TABLE_MIN_N, TABLE_MAX_N + 1):
            cone = canonicalize([Factor(kind, n)])
            report.add(Record(repr(Factor(kind, n)), str(closed_form(n)), str(cone.signature)))
    report.add(Record(repr(Factor(FactorKind.OCTONION_PSD, 3)), str(Signature(27, 79)),
                      str(octonion_psd().signature)))
    clashes = irreducible_signature_clashes(IRREDUCIBLE_MAX_DIM)
    report.add(Record(f"irreducible factors up to dimension {IRREDUCIBLE_MAX_DIM}", INJECTIVE,
                      INJECTIVE if not clashes else '; '.join(f"{a!r} ~ {b!r}" for a, b in clashes)))


@claim(CLAIM_TABLE2)
def verify_table2(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(0, TABLE_MAX_N + 1):
        report.add(Record(f"R{n}", str(Signature(n, n)), str(orthant(n).signature)))


@claim(CLAIM_H2_CONSISTENCY)
def verify_h2_consistency(report: Report, n_jobs: Optional[int]) -> None:
    for kind in (FactorKind.REAL_PSD, FactorKind.COMPLEX_PSD, FactorKind.QUATERNION_PSD):
        lorentz_cone = lorentz(2 + kind.field_dimension)
        cone = canonicalize([Factor(kind, 2)])
        report.add(Record(
            input=repr(Factor(kind, 2)),
            expected=f"{format_cone(lorentz_cone)} {CLOSED_FORMS[kind](2)}",
            actual=f"{format_cone(cone)} {CLOSED_FORMS[FactorKind.LORENTZ](lorentz_cone.dim)}",
        ))


@claim(CLAIM_LORENTZ_NO_SIMULACRA)
def verify_lorentz_no_simulacra(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(0, LORENTZ_SEARCH_MAX_N + 1):
        target = lorentz(n)
        report.add(_search_record(target, NONE, has_simulacra(target, SearchPolicy.full(), n_jobs), f"L{n}"))


@claim(CLAIM_REAL_PSD)
def verify_real_psd(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(3, CONSTRUCTION_MAX_N + 1):
        report.add(_simulacrum_record(real_psd(n), simulacrum_real_psd(n)))
    for n in (5, 6):
        report.add(_simulacrum_record(real_psd(n), simulacrum_real_psd_via_complex(n)))
    target = real_psd(3)
    expected = [parse_cone("L4 + R2")]
    report.add(Record(f"all simulacra of {format_cone(target)}", _listing(expected),
                      _listing(find_simulacra(target, SearchPolicy.full(), n_jobs))))


@claim(CLAIM_COMPLEX_PSD)
def verify_complex_psd(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(4, CONSTRUCTION_MAX_N + 1):
        report.add(_simulacrum_record(complex_psd(n), simulacrum_complex_psd(n)))


@claim(CLAIM_COMPLEX_PSD_3_NONE)
def verify_complex_psd_3_none(report: Report, n_jobs: Optional[int]) -> None:
    target = complex_psd(3)
    report.add(Record(f"all simulacra of {format_cone(target)}", NONE,
                      _listing(find_simulacra(target, SearchPolicy.full(), n_jobs))))


@claim(CLAIM_QUATERNION_PSD)
def verify_quaternion_psd(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(3, CONSTRUCTION_MAX_N + 1):
        report.add(_simulacrum_record(quaternion_psd(n), simulacrum_quaternion_psd(n)))


@claim(CLAIM_OCTONION_PSD)
def verify_octonion_psd(report: Report, n_jobs: Optional[int]) -> None:
    target = octonion_psd()
    report.add(_simulacrum_record(target, simulacrum_octonion_psd()))
    first, second = octonion_two_forms()
    report.add(_simulacrum_record(target, second))
    report.add(Record(f"{format_cone(first)} vs {format_cone(second)}", str(Relation.SIMULACRA),
                      str(relation(first, second))))


@claim(CLAIM_DOUBLE_COMPLEX)
def verify_double_complex(report: Report, n_jobs: Optional[int]) -> None:
    report.add(_simulacrum_record(complex_psd(3) + complex_psd(3), simulacrum_double_complex()))


@claim(CLAIM_TWO_FAMILIES)
def verify_two_families(report: Report, n_jobs: Optional[int]) -> None:
    for d in range(0, TWO_FAMILIES_MAX_DIM + 1):
        for cone in enumerate_cones(d, SearchPolicy.full()):
            form = two_families_form(cone)
            if is_two_families_form(cone):
                report.add(Record(format_cone(cone), format_cone(cone), format_cone(form)))
            elif is_two_families_form(form):
                report.add(_simulacrum_record(cone, form))
            else:
                report.add(Record(format_cone(cone), "two-families form", "other form", format_cone(form)))
    left, right = non_uniqueness_example()
    report.add(_simulacrum_record(left, right))


@claim(CLAIM_THM4_REGION)
def verify_thm4_region(report: Report, n_jobs: Optional[int]) -> None:
    region = dict(SUBPROBLEM_REGION)
    region[SUBPROBLEM_EXCLUDED_N] = SUBPROBLEM_EXCLUDED_DIMS
    policy = SearchPolicy.full()
    for n in sorted(region):
        violations = []
        for d in region[n]:
            for k in enumerate_cones(d, policy):
                conditions = check_conditions(k, n)
                if not (conditions.c1 and conditions.c2):
                    continue
                for j in subproblem_reduction_violations(k, n, policy, n_jobs):
                    violations.append(f"K={format_cone(k)} J={format_cone(j)}")
        expected = "K=R2 J=H3(R)" if n == SUBPROBLEM_EXCLUDED_N else NONE
        report.add(Record(f"n={n}, dim K in {list(region[n])}", expected, '; '.join(violations) or NONE))


@claim(CLAIM_TABLE3)
def verify_table3(report: Report, n_jobs: Optional[int]) -> None:
    rows = {row['n']: row for row in load_h3c_witnesses()}
    report.add(Record("rows with simulacra", str(sorted(H3C_LN_SIMULACRA)), str(sorted(rows))))
    for n, row in sorted(rows.items()):
        target = complex_psd(3) + lorentz(n)
        report.add(Record(f"{format_cone(target)} listed", str(Signature(row['dim'], row['rank'])),
                          str(target.signature)))
        report.add(_simulacrum_record(target, row['cone']))
    for n in range(1, H3C_LN_SEARCH_MAX_N + 1):
        target = complex_psd(3) + lorentz(n)
        expected = FOUND if n in H3C_LN_SIMULACRA else NONE
        report.add(_search_record(target, expected, has_simulacra(target, SearchPolicy.full(), n_jobs)))


@claim(CLAIM_LMLN)
def verify_lmln(report: Report, n_jobs: Optional[int]) -> None:
    for m in range(1, LMLN_MAX_M + 1):
        lowest = (m * m - 3 * m + 6) // 2
        for n in range(lowest, lowest + LMLN_N_SPAN + 1):
            target = lorentz(m) + lorentz(n)
            expected = "H3(R)" if (m, n) == (2, 4) else NONE
            found = find_simulacra(target, SearchPolicy.full(), n_jobs)
            report.add(Record(f"L{m} + L{n}", expected, _listing(found)))


@claim(CLAIM_LNLN_EXHAUSTIVE)
def verify_lnln_exhaustive(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(0, LNLN_EXHAUSTIVE_MAX_N + 1):
        target = lorentz(n) + lorentz(n)
        expected = NONE if n in LNLN_NO_SIMULACRA else FOUND
        report.add(_search_record(target, expected, has_simulacra(target, SearchPolicy.full(), n_jobs),
                                  f"L{n} + L{n}"))


@claim(CLAIM_LNLN_APPENDIX_B)
def verify_lnln_appendix_b(report: Report, n_jobs: Optional[int]) -> None:
    witnesses = load_lnln_witnesses()
    expected_rows = [n for n in range(0, LNLN_FIXTURE_MAX_N + 1) if n not in LNLN_NO_SIMULACRA]
    report.add(Record("rows listed", str(expected_rows), str(sorted(witnesses))))
    for n, parts in sorted(witnesses.items()):
        if n > LNLN_FIXTURE_MAX_N:
            continue
        label = f"L{n} + L{n}: {{{', '.join(str(p) for p in parts)}}}"
        report.add(Record(f"{label} sums", f"{2 * n} {n * n - n + 2}",
                          f"{sum(parts)} {sum(lorentz_rank(p) for p in parts)}"))
        report.add(_simulacrum_record(lorentz(n) + lorentz(n), lorentz_sum(parts), label))


@claim(CLAIM_LNLN_FORMULA)
def verify_lnln_formula(report: Report, n_jobs: Optional[int]) -> None:
    for n in range(LNLN_FORMULA_MIN_N, LNLN_FORMULA_MAX_N + 1):
        params = BigLnLnParams.from_n(n)
        target = lorentz(n) + lorentz(n)
        witness = params.cone()
        report.add(_simulacrum_record(target, witness, f"L{n} + L{n}"))
        report.add(Record(f"largest factor for n={n}", f"L{n + 2 * params.m}",
                          f"L{witness.factors[0].n}"))


@claim(CLAIM_BOUNDARY_COUNTEREXAMPLES)
def verify_boundary_counterexamples(report: Report, n_jobs: Optional[int]) -> None:
    for m in range(BOUNDARY_MIN_M, BOUNDARY_MAX_M + 1):
        n, left, right = condition1_boundary_counterexample(m)
        conditions = check_conditions(lorentz(m), n)
        report.add(Record(f"L{m} with n={n} meets the first condition", "False", str(conditions.c1)))
        report.add(_simulacrum_record(left, right))
    n, left, right = condition2_boundary_counterexample()
    conditions = check_conditions(complex_psd(3), n)
    report.add(Record(f"H3(C) with n={n} meets the second condition", "False", str(conditions.c2)))
    report.add(_simulacrum_record(left, right))
