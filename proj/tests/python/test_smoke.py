"""Smoke tests for the python bindings."""

import json
import random

import pytest

import hermenc as he


@pytest.fixture(scope="module")
def field():
    return he.build_field(1)


@pytest.fixture(scope="module")
def params(field):
    return he.make_code(field, 4)


def test_field_constants(field):
    assert (field.q, field.q2, field.modulus) == (2, 4, 0x7)
    assert field.gamma == 1
    assert field.add(field.y0, field.pow(field.y0, field.q)) == 1


def test_field_arithmetic(field):
    w = field.epsilon
    assert field.mul(w, w) == 3
    assert field.inv(w) == 3
    assert field.subfield_index(0) == -1
    assert field.subfield_index(1) == 0
    assert field.subfield_index(w) is None


def test_code_tables(params):
    assert (params.n, params.k, params.g) == (8, 4, 1)
    assert params.a_hat == [2, 0]
    assert params.info_len == [3, 1]
    assert params.b_hat == [2, 1, 1, 0]
    assert params.basis == [(0, 0), (1, 0), (2, 0), (0, 1)]
    assert he.info_positions(params) == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_points_on_curve(field):
    pts = he.enumerate_points(field)
    assert len(pts) == 8
    for _, _, x, y in pts:
        assert field.pow(x, 3) == field.add(field.pow(y, 2), y)


def test_encode_check_roundtrip(params):
    code, rtilde = he.encode(params, [1, 0, 0, 0])
    assert code == [[1, 0, 0, 3], [0, 1, 1, 2]]
    assert he.is_codeword(params, code)
    assert len(rtilde) == 2

    corrupted = [row[:] for row in code]
    corrupted[0][0] ^= 2
    assert not he.is_codeword(params, corrupted)


def test_encoder_matches_oracle(params):
    rng = random.Random(5)
    assert he.verify_information_set(params)
    for _ in range(25):
        info = [rng.randrange(4) for _ in range(params.k)]
        code, _ = he.encode(params, info)
        assert code == he.complete_systematic(params, info)


def test_syndrome_paths_agree():
    f = he.build_field(2)
    p = he.make_code(f, 19)
    rng = random.Random(6)
    rows = [[rng.randrange(f.q2) for _ in range(f.q2)] for _ in range(f.q)]
    direct = he.syndromes_direct(p, rows)
    fast = he.syndromes_fast(p, rows)
    assert direct == fast
    assert len(direct) == p.n - p.k


def test_simulate(params):
    info = [1, 2, 3, 0]
    code, _ = he.encode(params, info)
    for preset, cycles in (("paper", 10), ("serial", 13)):
        sim = he.simulate(params, info, preset=preset)
        assert sim["code"] == code
        assert sim["total_cycles"] == cycles
        assert sim["total_cycles"] == he.cycle_formula(params, preset)
        assert sim["trace"][0][0] <= sim["trace"][-1][0]


def test_resource_report(params):
    rep = he.resource_report(params)
    assert rep["within_bound"]
    assert rep["total"] <= rep["bound_constant"] * params.field.q ** 2


def test_array_json_roundtrip(params):
    code, _ = he.encode(params, [2, 3, 1, 0])
    text = he.array_to_json(params, code)
    doc = json.loads(text)
    assert doc["s"] == 1 and doc["m"] == 4
    s, m, rows = he.array_from_json(text)
    assert (s, m, rows) == (1, 4, code)


def test_errors(field, params):
    with pytest.raises(ValueError):
        he.build_field(0)
    with pytest.raises(ValueError):
        he.make_code(field, 99)
    with pytest.raises(ValueError):
        he.encode(params, [1, 2])
