import json
import os
import random

import pytest

from cones.factory import canonicalize, complex_psd, lorentz, lorentz_sum, octonion_psd, orthant, quaternion_psd, \
    real_psd
from cones.models import Cone, Factor, FactorKind, Relation, Signature, direct_sum, factor_dim, factor_rank, \
    relation, signature
from cones.parser import format_cone, parse_cone, parse_factors
from exceptions import CanonicalizationError, ConeParseError, InvalidInput, NotCanonical
from tests.conftest import HERE, get_cones

L, R, C, H, O = (FactorKind.LORENTZ, FactorKind.REAL_PSD, FactorKind.COMPLEX_PSD, FactorKind.QUATERNION_PSD,
                 FactorKind.OCTONION_PSD)

with open(os.path.join(HERE, 'fixtures/signatures.json')) as fh:
    expected_signatures = json.load(fh)


@pytest.mark.parametrize("kind,n,expected", [
    (L, 5, 5),
    (R, 3, 6),
    (O, 3, 27),
    (C, 4, 16),
    (H, 3, 15),
    (R, 2, 3),
    (L, 0, 0),
])
def test_factor_dim(kind, n, expected):
    assert expected == factor_dim(Factor(kind, n))


@pytest.mark.parametrize("kind,n,expected", [
    (L, 4, 7),
    (C, 3, 17),
    (L, 1, 1),
    (R, 3, 9),
    (H, 3, 36),
    (O, 3, 79),
])
def test_factor_rank(kind, n, expected):
    assert expected == factor_rank(Factor(kind, n))


@pytest.mark.parametrize("kind,n", [
    (L, 0),
    (L, 2),
    (C, 0),
    (H, 1),
    (R, 2),
    (O, 2),
])
def test_factor_rank_needs_canonical_factor(kind, n):
    with pytest.raises(NotCanonical):
        factor_rank(Factor(kind, n))


def test_factor_rejects_negative_size():
    with pytest.raises(InvalidInput):
        Factor(L, -1)


@pytest.mark.parametrize("expression,signature_", sorted(expected_signatures.items()))
def test_signature_fixtures(expression, signature_):
    assert tuple(signature_) == parse_cone(expression).signature.as_tuple()


@pytest.mark.parametrize("n", range(2, 51))
def test_building_block_closed_forms(n):
    assert (n, (n * n - n + 2) // 2) == lorentz(n).signature.as_tuple()
    assert ((n * n + n) // 2, n * n) == real_psd(n).signature.as_tuple()
    assert (n * n, 2 * n * n - 1) == complex_psd(n).signature.as_tuple()
    assert (2 * n * n - n, 4 * n * n) == quaternion_psd(n).signature.as_tuple()
    assert (n, n) == orthant(n).signature.as_tuple()


@pytest.mark.parametrize("raw,expected", [
    ([Factor(L, 2)], Cone((Factor(L, 1), Factor(L, 1)))),
    ([Factor(R, 2)], Cone((Factor(L, 3),))),
    ([Factor(C, 2)], Cone((Factor(L, 4),))),
    ([Factor(H, 2)], Cone((Factor(L, 6),))),
    ([Factor(O, 2)], Cone((Factor(L, 10),))),
    ([Factor(L, 0), Factor(L, 5)], Cone((Factor(L, 5),))),
    ([Factor(C, 0), Factor(H, 1), Factor(O, 1)], Cone((Factor(L, 1), Factor(L, 1)))),
    ([Factor(R, 3), Factor(L, 2)], Cone((Factor(R, 3), Factor(L, 1), Factor(L, 1)))),
    ([], Cone()),
])
def test_canonicalize(raw, expected):
    assert expected == canonicalize(raw)


def test_canonicalize_octonion_too_big():
    with pytest.raises(CanonicalizationError):
        canonicalize([Factor(O, 4)])


def test_cone_rejects_non_canonical_factor():
    with pytest.raises(NotCanonical):
        Cone((Factor(L, 2),))


def test_cone_factor_order():
    cone = canonicalize([Factor(L, 1), Factor(R, 3), Factor(L, 6), Factor(C, 3), Factor(L, 9)])
    assert [Factor(C, 3), Factor(L, 9), Factor(R, 3), Factor(L, 6), Factor(L, 1)] == list(cone.factors)


def test_cone_equality_ignores_input_order():
    assert lorentz_sum([3, 5, 1]) == lorentz_sum([1, 5, 3])
    assert hash(lorentz_sum([3, 5, 1])) == hash(lorentz_sum([1, 5, 3]))


@pytest.mark.parametrize("cone,expected", [
    (real_psd(3), (6, 9)),
    (lorentz(4) + orthant(2), (6, 9)),
    (Cone(), (0, 0)),
    (orthant(8), (8, 8)),
    (octonion_psd(), (27, 79)),
])
def test_signature(cone, expected):
    assert expected == signature(cone).as_tuple()


@pytest.mark.parametrize("a,b,expected", [
    (real_psd(3), lorentz(4) + orthant(2), Relation.SIMULACRA),
    (lorentz(3), lorentz(3), Relation.ISOMORPHIC),
    (lorentz(5), lorentz(4) + orthant(1), Relation.DISTINCT),
    (lorentz(2), orthant(2), Relation.ISOMORPHIC),
    (real_psd(2), lorentz(3), Relation.ISOMORPHIC),
])
def test_relation(a, b, expected):
    assert expected == relation(a, b)
    assert expected == relation(b, a)


def test_orthant():
    assert Cone((Factor(L, 1), Factor(L, 1))) == orthant(2)
    assert Cone() == orthant(0)
    assert orthant(0).is_trivial
    with pytest.raises(InvalidInput):
        orthant(-1)


def test_cone_multiset_operations():
    cone = parse_cone("H3(C) + 2*L4 + R3")
    assert 2 == cone.count(Factor(L, 4))
    assert cone.contains(lorentz(4) + orthant(2))
    assert not cone.contains(lorentz(4) + lorentz(4) + lorentz(4))
    assert complex_psd(3) + orthant(3) == cone.without(lorentz(4) + lorentz(4))
    assert not cone.lorentz_only
    assert [1, 1, 1, 4, 4] == cone.lorentz_parts
    assert (Factor(C, 3),) == cone.nonlorentz_factors
    assert complex_psd(3).is_irreducible
    assert not orthant(2).is_irreducible
    with pytest.raises(InvalidInput):
        cone.without(lorentz(5))


def test_direct_sum():
    assert parse_cone("L5 + L3 + R2") == direct_sum([lorentz(5), lorentz(3), orthant(2)])
    assert Cone() == direct_sum([])


def test_signature_arithmetic():
    assert Signature(6, 9) == Signature(4, 7) + Signature(2, 2)
    assert Signature(0, 0) == orthant(0).signature
    assert "(6, 9)" == str(Signature(6, 9))


def test_sum_matches_canonicalize():
    rng = random.Random(1570)
    for _ in range(2000):
        a = canonicalize(_random_raw_factors(rng, rng.randint(0, 6)))
        b = canonicalize(_random_raw_factors(rng, rng.randint(0, 6)))
        expected = canonicalize(a.factors + b.factors)
        assert expected.factors == (a + b).factors
        assert expected.signature == (a + b).signature
        assert expected == direct_sum([b, Cone(), a])


def test_sum_with_large_orthant():
    cone = lorentz(202) + orthant(19698) + quaternion_psd(3)
    assert [lorentz(202).factors[0], quaternion_psd(3).factors[0]] == list(cone.factors[:2])
    assert 19698 == cone.count(Factor(L, 1))
    assert Signature(19915, 40036) == cone.signature
    assert Signature(sum(f.dim for f in cone), sum(f.rank for f in cone)) == cone.signature


def test_from_ordered():
    factors = (Factor(L, 5), Factor(L, 1))
    assert Cone(factors) == Cone.from_ordered(factors)
    assert Signature(6, 12) == Cone.from_ordered(factors).signature
    assert Signature(6, 12) == Cone.from_ordered(factors, Signature(6, 12)).signature


def _random_raw_factors(rng: random.Random, size: int):
    raw = []
    for _ in range(size):
        kind = rng.choice(list(FactorKind))
        n = rng.randint(0, 3) if kind is O else rng.randint(0, 9)
        raw.append(Factor(kind, n))
    return raw


def test_signature_additivity_on_random_splits():
    rng = random.Random(1962)
    for _ in range(10000):
        cone = canonicalize(_random_raw_factors(rng, rng.randint(0, 8)))
        factors = list(cone.factors)
        rng.shuffle(factors)
        cut = rng.randint(0, len(factors))
        a, b = Cone(tuple(factors[:cut])), Cone(tuple(factors[cut:]))
        assert cone == a + b
        assert cone.signature == a.signature + b.signature


def test_canonicalize_is_idempotent():
    rng = random.Random(2021)
    for _ in range(10000):
        cone = canonicalize(_random_raw_factors(rng, rng.randint(0, 8)))
        assert cone == canonicalize(cone.factors)


def test_canonicalize_preserves_dimension():
    rng = random.Random(7)
    for _ in range(1000):
        raw = _random_raw_factors(rng, rng.randint(0, 8))
        assert sum(factor_dim(f) for f in raw) == canonicalize(raw).dim


@pytest.mark.parametrize("d", range(0, 13))
def test_orthant_minimality(d):
    for cone in get_cones(d):
        assert cone.dim <= cone.rank
        if cone != orthant(d):
            assert cone.rank > d


@pytest.mark.parametrize("d", range(0, 13))
def test_lorentz_maximality(d):
    for cone in get_cones(d):
        if cone != lorentz(d):
            assert cone.rank < lorentz(d).rank


def test_relation_trichotomy():
    cones = [c for d in range(7) for c in get_cones(d)]
    for a in cones:
        for b in cones:
            verdict = relation(a, b)
            assert verdict == relation(b, a)
            if verdict is Relation.ISOMORPHIC:
                assert a == b
            elif verdict is Relation.SIMULACRA:
                assert a != b and a.signature == b.signature
            else:
                assert a.signature != b.signature


@pytest.mark.parametrize("expression,expected", [
    ("H3(C) + L5", "H3(C) + L5"),
    ("2*L3 + R8", "2*L3 + R8"),
    ("L11 + L5 + L3 + R8", "L11 + L5 + L3 + R8"),
    ("L2", "R2"),
    ("L1+L1", "R2"),
    ("R3 + L4 + L1", "L4 + R4"),
    ("H2(R)", "L3"),
    ("H3(O)", "H3(O)"),
    ("L0", "R0"),
    ("R0", "R0"),
    ("  L5+ 2 * H3( R )  ", "2*H3(R) + L5"),
    ("L3 + L3 + L3", "3*L3"),
])
def test_format_cone(expression, expected):
    assert expected == format_cone(parse_cone(expression))


def test_parse_factors_keeps_raw_factors():
    assert [Factor(L, 2), Factor(R, 2), Factor(R, 2)] == parse_factors("L2 + 2*H2(R)")
    assert [Factor(L, 1)] * 3 == parse_factors("R3")


@pytest.mark.parametrize("d", range(0, 11))
def test_format_then_parse_is_identity(d):
    for cone in get_cones(d):
        assert cone == parse_cone(format_cone(cone))


@pytest.mark.parametrize("expression,position", [
    ("L", 1),
    ("L5 +", 4),
    ("X5", 0),
    ("L5 L3", 3),
    ("H3(Q)", 3),
    ("H3(C", 4),
    ("2*", 2),
    ("3 L4", 2),
    ("", 0),
    ("L5 + 7", 6),
])
def test_parse_error_position(expression, position):
    with pytest.raises(ConeParseError) as e:
        parse_cone(expression)
    assert position == e.value.position


def test_parse_octonion_too_big():
    with pytest.raises(CanonicalizationError):
        parse_cone("H5(O)")
