#!/usr/bin/env python
import logging
import sys
from functools import wraps
from typing import Optional

import click

import controller
from cones.models import FactorKind
from cones.parser import format_cone
from constants.common import (CLAIMS, CLAIM_ALL, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, FIELD_LETTER, FORMATS,
                              FORMAT_CSV, LETTER_FIELD, LOG_LEVEL, TABLES, TABLE_B_SEARCH_LIMIT, TABLE_MAX_N)
from exceptions import InvalidInput, SimulacraException
from search.models import SearchPolicy
from utils import write_reports
from verification.models import Report

logging.basicConfig(
    stream=sys.stderr,
    level=LOG_LEVEL,
    format='%(asctime)s %(levelname)s: %(message)s')


def exit_on_invalid_input(f):
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except InvalidInput as e:
            sys.stderr.write(f"{e}\n")
            sys.exit(EXIT_USAGE)
        except SimulacraException as e:
            sys.stderr.write(f"{e}\n")
            sys.exit(EXIT_FAILURE)
    return decorated_function


def _parse_kinds(allow: str):
    """ Comma separated field letters (R, C, H, O) or kind names, e.g. "R,C" or "RealPSD" """
    by_name = {k.value.lower(): k for k in FactorKind if k.is_matrix}
    kinds = set()
    for item in (i.strip() for i in allow.split(',')):
        if item.upper() in LETTER_FIELD:
            kinds.add(FactorKind(LETTER_FIELD[item.upper()]))
        elif item.lower() in by_name:
            kinds.add(by_name[item.lower()])
        elif item:
            raise InvalidInput(f"Unknown matrix kind `{item}`, expected one of "
                               f"{', '.join(FIELD_LETTER.values())} or a kind name")
    return frozenset(kinds)


def _echo_report(report: Report) -> None:
    click.echo(f"{report.claim}: {report.verdict} ({len(report.records)} records, {report.elapsed_ms} ms)")
    for record in report.failures:
        witness = f" [{record.witness}]" if record.witness else ""
        click.echo(f"  {record.input}: expected {record.expected}, got {record.actual}{witness}")


@click.group()
def cli():
    pass


@click.command()
@click.argument('expression')
@exit_on_invalid_input
def signature(expression: str):
    cone = controller.get_cone(expression)
    click.echo(f"{format_cone(cone)} {cone.signature}")


@click.command()
@click.argument('expression_a')
@click.argument('expression_b')
@exit_on_invalid_input
def relate(expression_a: str, expression_b: str):
    a, b, verdict = controller.get_relation(expression_a, expression_b)
    click.echo(str(verdict))
    click.echo(f"{format_cone(a)} {a.signature}")
    click.echo(f"{format_cone(b)} {b.signature}")


@click.command()
@click.argument('expression')
@click.option('--lorentz-only', is_flag=True, help="Only consider sums of Lorentz cones")
@click.option('--allow', default=None, help="Matrix kinds to consider, e.g. R,C,H,O")
@click.option('--min-lorentz-part', default=1, type=int)
@click.option('--max-lorentz-part', default=None, type=int)
@click.option('--max-results', default=None, type=int)
@click.option('--jobs', default=None, type=int, help="Number of joblib workers")
@exit_on_invalid_input
def simulacra(expression: str, lorentz_only: bool, allow: Optional[str], min_lorentz_part: int,
              max_lorentz_part: Optional[int], max_results: Optional[int], jobs: Optional[int]):
    kwargs = dict(min_lorentz_part=min_lorentz_part, max_lorentz_part=max_lorentz_part, max_results=max_results)
    if lorentz_only:
        policy = SearchPolicy.lorentz_only(**kwargs)
    elif allow is not None:
        policy = SearchPolicy.full(allowed_kinds=_parse_kinds(allow), **kwargs)
    else:
        policy = SearchPolicy.full(**kwargs)
    found = controller.get_simulacra(expression, policy, jobs)
    for cone in found:
        click.echo(format_cone(cone))
    if not found:
        sys.stderr.write(f"No simulacra of {expression}\n")
        sys.exit(EXIT_FAILURE)


@click.command()
@click.argument('claim_id', required=False)
@click.option('--json', 'json_path', default=None, type=click.Path(dir_okay=False), help="Write JSON lines here")
@click.option('--jobs', default=None, type=int, help="Number of joblib workers")
@click.option('--list', 'list_claims', is_flag=True, help="Print the claim ids and exit")
@exit_on_invalid_input
def verify(claim_id: Optional[str], json_path: Optional[str], jobs: Optional[int], list_claims: bool):
    if list_claims:
        for item in CLAIMS:
            click.echo(item)
        return
    if claim_id is None:
        raise InvalidInput(f"Missing claim id, expected one of: {', '.join(CLAIMS + (CLAIM_ALL,))}")
    claim_ids = CLAIMS if claim_id == CLAIM_ALL else (claim_id,)
    reports = []
    for item in claim_ids:
        report = controller.get_report(item, jobs)
        _echo_report(report)
        reports.append(report)
    if json_path:
        write_reports(reports, json_path)
    sys.exit(EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE)


@click.command()
@click.argument('which', type=click.Choice(TABLES, case_sensitive=False))
@click.option('--format', 'fmt', default=FORMAT_CSV, type=click.Choice(FORMATS))
@click.option('--max-n', default=TABLE_MAX_N, type=int, help="Largest n for Tables 1 and 2")
@click.option('--search-limit', default=TABLE_B_SEARCH_LIMIT, type=int,
              help="Largest n searched for Table B; larger rows are only validated")
@click.option('--jobs', default=None, type=int, help="Number of joblib workers")
@exit_on_invalid_input
def table(which: str, fmt: str, max_n: int, search_limit: int, jobs: Optional[int]):
    click.echo(controller.get_table(which.upper(), fmt, max_n, search_limit, jobs), nl=False)


cli.add_command(signature)
cli.add_command(relate)
cli.add_command(simulacra)
cli.add_command(verify)
cli.add_command(table)


if __name__ == '__main__':
    cli()
