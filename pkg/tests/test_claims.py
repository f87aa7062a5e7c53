import json

import pytest

from cones.factory import complex_psd, lorentz
from cones.models import Relation, relation
from cones.parser import parse_cone
from constants.common import (CLAIMS, CLAIM_THM4_REGION, FORMAT_CSV, FORMAT_JSON, H3C_LN_SIMULACRA,
                              LNLN_NO_SIMULACRA, SUBPROBLEM_EXCLUDED_N, TABLE_1, TABLE_2)
from exceptions import FixtureError, InvalidInput, UnknownClaim
from utils import load_h3c_witnesses, load_lnln_witnesses, write_reports
from verification import claims, tables
from verification.models import Record, Report


@pytest.mark.parametrize("claim_id", [
    'table1',
    'table2',
    'table3',
    'h2-consistency',
    'lorentz-no-simulacra',
    'real-psd',
    'complex-psd',
    'complex-psd-3-none',
    'quaternion-psd',
    'octonion-psd',
    'double-complex',
    'two-families',
    'lmln',
    'lnln-appendixB',
    'lnln-exhaustive',
    'lnln-formula',
    'boundary-counterexamples',
])
def test_claim_passes(claim_id):
    report = claims.verify(claim_id)
    assert claim_id == report.claim
    assert report.records
    assert [] == report.failures
    assert 'pass' == report.verdict


def test_every_claim_is_registered():
    assert set(CLAIMS) == set(claims.registry)


def test_h2_consistency_records():
    report = claims.verify('h2-consistency')
    assert 3 == len(report.records)
    assert "L3 (3, 4)" == report.records[0].expected


def test_thm4_region():
    report = claims.verify(CLAIM_THM4_REGION)
    assert report.passed
    violations = [r for r in report.records if r.actual != claims.NONE]
    assert 1 == len(violations)
    assert violations[0].input.startswith(f"n={SUBPROBLEM_EXCLUDED_N},")
    assert "K=R2 J=H3(R)" == violations[0].actual


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        claims.verify('table4')
    with pytest.raises(InvalidInput):
        claims.verify('')


def test_record_verdict():
    assert Record("L5", "none", "none").passed
    assert not Record("L5", "none", "simulacra").passed
    assert not Record("L5", "none", "none", passed=False).passed


def test_report_serialize():
    report = Report('table2')
    report.add(Record("R0", "(0, 0)", "(0, 0)"))
    report.add(Record("R1", "(1, 1)", "(1, 2)", witness="R1"))
    serialized = report.serialize()
    assert 'fail' == serialized['verdict']
    assert 'table2' == serialized['claim']
    assert {"input": "R0", "expected": "(0, 0)", "actual": "(0, 0)"} == serialized['records'][0]
    assert "R1" == serialized['records'][1]['witness']
    assert 1 == len(report.failures)


def test_write_reports(tmp_path):
    path = tmp_path / 'reports.jsonl'
    reports = [claims.verify('table2'), claims.verify('double-complex')]
    write_reports(reports, str(path))
    lines = path.read_text(encoding='utf-8').splitlines()
    assert 2 == len(lines)
    first, second = (json.loads(line) for line in lines)
    assert 'table2' == first['claim']
    assert 'pass' == first['verdict']
    assert 51 == len(first['records'])
    assert "L7 + L3 + R8" == second['records'][0]['witness']
    assert isinstance(second['elapsed_ms'], int)


def test_load_lnln_witnesses():
    witnesses = load_lnln_witnesses()
    assert not set(witnesses) & LNLN_NO_SIMULACRA
    assert set(range(4, 101)) - LNLN_NO_SIMULACRA == set(witnesses)
    for n, parts in witnesses.items():
        assert 2 * n == sum(parts)
        assert parts == sorted(parts)


def test_load_h3c_witnesses():
    rows = load_h3c_witnesses()
    assert set(H3C_LN_SIMULACRA) == {row['n'] for row in rows}
    for row in rows:
        target = complex_psd(3) + lorentz(row['n'])
        assert (row['dim'], row['rank']) == target.signature.as_tuple()
        assert Relation.SIMULACRA == relation(row['cone'], target)


@pytest.mark.parametrize("content", [
    "8: 1,5,10\n8: 1,5,10\n",
    "8: 10,5,1\n",
    "8 1,5,10\n",
    "eight: 1\n",
])
def test_load_lnln_witnesses_rejects(tmp_path, content):
    path = tmp_path / 'witnesses.txt'
    path.write_text(content)
    with pytest.raises(FixtureError) as e:
        load_lnln_witnesses(str(path))
    assert e.value.line_no in (1, 2)


def test_load_lnln_witnesses_skips_comments(tmp_path):
    path = tmp_path / 'witnesses.txt'
    path.write_text("# comment\n\n8: 1, 5, 10\n")
    assert {8: [1, 5, 10]} == load_lnln_witnesses(str(path))


@pytest.mark.parametrize("content", [
    '- {n: 2, dim: 11, rank: 19}\n',
    '- {n: 2, dim: 11, rank: 19, witness: "L5 +"}\n',
])
def test_load_h3c_witnesses_rejects(tmp_path, content):
    path = tmp_path / 'witnesses.yaml'
    path.write_text(content)
    with pytest.raises(FixtureError):
        load_h3c_witnesses(str(path))


def test_table_1():
    rows = tables.table_1(5)
    assert 4 * 4 + 1 == len(rows)
    assert {"cone": "H3(H)", "n": 3, "dim": 15, "rank": 36} in rows
    assert {"cone": "L5", "n": 5, "dim": 5, "rank": 11} in rows
    assert {"cone": "H3(O)", "n": 3, "dim": 27, "rank": 79} == rows[-1]


def test_table_2():
    rows = tables.table_2(3)
    assert [0, 1, 2, 3] == [row['rank'] for row in rows]
    assert "R3" == rows[-1]['cone']


def test_table_b_without_search():
    rows = tables.table_b(search_limit=0)
    assert 90 == len(rows)
    assert all(row['valid'] for row in rows)
    assert all(row['found'] is None for row in rows)
    assert "{1, 5, 10}" == next(row['partition'] for row in rows if row['n'] == 8)


def test_table_b_with_search():
    rows = [row for row in tables.table_b(search_limit=10) if row['found'] is not None]
    assert [4, 8, 9, 10] == [row['n'] for row in rows]


def test_table_3():
    rows = tables.table_3()
    assert 14 == len(rows)
    assert set(H3C_LN_SIMULACRA) == {row['n'] for row in rows}
    assert sorted(row['n'] for row in rows) == [row['n'] for row in rows]
    for row in rows:
        target = complex_psd(3) + lorentz(row['n'])
        assert (row['dim'], row['rank']) == target.signature.as_tuple()
        assert Relation.SIMULACRA == relation(parse_cone(row['witness']), target)


def test_table_3_rejects_invalid_witness(monkeypatch):
    row = {'n': 2, 'dim': 11, 'rank': 19, 'witness': 'L11', 'cone': parse_cone('L11')}
    monkeypatch.setattr(tables, 'load_h3c_witnesses', lambda: [row])
    with pytest.raises(FixtureError) as e:
        tables.table_3()
    assert 1 == e.value.line_no


def test_table_3_rejects_missing_witness(monkeypatch):
    monkeypatch.setattr(tables, 'load_h3c_witnesses', lambda: [])
    with pytest.raises(FixtureError) as e:
        tables.table_3()
    assert e.value.line_no is None
    assert "n=2" in str(e.value)


def test_table_b_rejects_invalid_partition(monkeypatch):
    monkeypatch.setattr(tables, 'load_lnln_witnesses', lambda: {8: [2, 4, 10]})
    with pytest.raises(FixtureError):
        tables.table_b(search_limit=0)


def test_render():
    rows = tables.table_2(1)
    assert "cone,n,dim,rank\nR0,0,0,0\nR1,1,1,1\n" == tables.render(rows, FORMAT_CSV)
    assert rows == json.loads(tables.render(rows, FORMAT_JSON))
    assert '' == tables.render([], FORMAT_CSV)
    with pytest.raises(InvalidInput):
        tables.render(rows, 'xml')


def test_generate():
    assert tables.table_1(3) == tables.generate(TABLE_1, max_n=3)
    assert tables.table_2(3) == tables.generate(TABLE_2, max_n=3)
    with pytest.raises(InvalidInput):
        tables.generate('4')
