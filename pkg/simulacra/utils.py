import json
import logging
from typing import Any, Dict, Iterable, List

import yaml

from cones.parser import parse_cone
from constants.common import LNLN_WITNESS_FIXTURE, PATTERN_LNLN_WITNESS_LINE, H3C_WITNESS_FIXTURE
from exceptions import FixtureError, InvalidInput
from verification.models import Report

log = logging.getLogger(__name__)


def load_lnln_witnesses(path: str = LNLN_WITNESS_FIXTURE) -> Dict[int, List[int]]:
    """
    Read the L^n + L^n witness fixture: one `n: p1,p2,...` line per n with ascending parts,
    blank lines and lines starting with `#` skipped.
    """
    witnesses = {}
    with open(path, encoding='utf-8') as fh:
        for line_no, line in enumerate(fh, 1):
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            found = PATTERN_LNLN_WITNESS_LINE.match(line)
            if found is None:
                raise FixtureError(f"Malformed witness line {line.strip()!r}", path, line_no)
            n = int(found.group(1))
            parts = [int(p) for p in found.group(2).split(',')]
            if parts != sorted(parts):
                raise FixtureError(f"Parts for n={n} are not ascending", path, line_no)
            if n in witnesses:
                raise FixtureError(f"Duplicate witness for n={n}", path, line_no)
            witnesses[n] = parts
    log.debug("Loaded %d L^n + L^n witnesses from %s", len(witnesses), path)
    return witnesses


def load_h3c_witnesses(path: str = H3C_WITNESS_FIXTURE) -> List[Dict[str, Any]]:
    """
    Read the H3(C) + L^n fixture. Each row holds `n`, `dim`, `rank` and `witness`; the witness
    expression is parsed into a cone under the key `cone`.
    """
    with open(path, encoding='utf-8') as fh:
        rows = yaml.safe_load(fh) or []
    for line_no, row in enumerate(rows, 1):
        missing = {'n', 'dim', 'rank', 'witness'} - set(row)
        if missing:
            raise FixtureError(f"Row is missing {', '.join(sorted(missing))}", path, line_no)
        try:
            row['cone'] = parse_cone(row['witness'])
        except InvalidInput as e:
            raise FixtureError(str(e), path, line_no)
    return rows


def report_to_json(report: Report) -> str:
    return json.dumps(report.serialize(), ensure_ascii=False)


def write_reports(reports: Iterable[Report], path: str) -> None:
    """ One JSON document per line, one line per report """
    with open(path, 'w', encoding='utf-8') as fh:
        for report in reports:
            fh.write(report_to_json(report) + '\n')
