import random

import pytest

from bbcovers.codes import Classification, Refusal, build_code, parse_code_spec
from bbcovers.distance import (
    distance_one_side,
    exact_distance,
    logical_vectors_of_weight,
    verify_dx_equals_dz,
)
from bbcovers.rings import Monomial


def test_exact_distance_18():
    res = exact_distance(parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2"), 4, both_sides=True)
    assert res.kind == "exact" and res.value == 2
    assert res.method == "coset"


def test_exact_distance_72():
    code = parse_code_spec("l=6 m=6 A=x^3+y+y^2 B=y^3+x+x^2")
    res = exact_distance(code, 6, both_sides=True)
    assert res.kind == "exact" and res.value == 6
    assert res.method == "enumeration"


def test_exact_distance_42():
    code = parse_code_spec("l=7 m=3 A=1+x^2+x^3y B=1+x^2+x^3y^2")
    res = exact_distance(code, 6)
    assert res.kind == "exact" and res.value == 6


def test_exact_distance_weight8_search():
    # h=4 entry of the k=6 sequence; exercises the w=8 enumeration level
    code = parse_code_spec("l=7 m=4 A=1+x^2+x^3y^2 B=1+x^2y+x^3")
    res = exact_distance(code, 8, both_sides=True)
    assert res.kind == "exact" and res.value == 8


def test_witness_is_minimum_weight_logical():
    code = parse_code_spec("l=9 m=3 A=x^3+y+y^2 B=1+x+x^2")
    res = distance_one_side(code, "Z", 6)
    assert res.value == 6
    assert res.witness.weight == 6
    assert code.classify(res.witness) == Classification.LOGICAL


def test_wmax_too_small_reports_interval():
    code = parse_code_spec("l=7 m=3 A=1+x^2+x^3y B=1+x^2+x^3y^2")
    res = distance_one_side(code, "Z", 4)
    assert res.kind == "lower-bound-interval"
    assert res.value is None and res.w_max == 4


def test_dx_equals_dz():
    for spec in (
        "l=3 m=3 A=1+y+y^2 B=1+x+x^2",
        "l=7 m=2 A=y+x^2+x^3 B=1+x^2+x^3",
        "l=7 m=1 A=1+x^2+x^3 B=1+x^2+x^3",
    ):
        assert verify_dx_equals_dz(parse_code_spec(spec), 6) is True


def test_dx_equals_dz_inconclusive_on_bounds():
    code = parse_code_spec("l=7 m=3 A=1+x^2+x^3y B=1+x^2+x^3y^2")
    assert verify_dx_equals_dz(code, 3) is None


def test_distance_refused_for_k_zero():
    with pytest.raises(Refusal):
        exact_distance(build_code("1", "1", 1, 1), 2)


def test_logical_vectors_of_weight_exhaustive():
    code = parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2")
    vecs = logical_vectors_of_weight(code, "Z", 2)
    assert vecs
    for v in vecs:
        assert v.bit_count() == 2
        assert code.classify_vector("Z", v) == Classification.LOGICAL


def _shift_poly(p, mono):
    return p.shift(mono)


def test_monomial_shift_invariance_same_multiplier():
    # multiplying both polynomials by one monomial leaves (n, k, d) unchanged
    rng = random.Random(71)
    base = parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2")
    d0 = exact_distance(base, 4).value
    for _ in range(4):
        mono = Monomial(rng.randrange(3), rng.randrange(3))
        shifted = build_code(_shift_poly(base.a, mono), _shift_poly(base.b, mono))
        assert (shifted.n, shifted.k) == (base.n, base.k)
        assert exact_distance(shifted, 4).value == d0


def test_monomial_shift_invariance_different_multipliers():
    rng = random.Random(73)
    base = parse_code_spec("l=7 m=2 A=y+x^2+x^3 B=1+x^2+x^3")
    d0 = exact_distance(base, 6).value
    for _ in range(4):
        ma = Monomial(rng.randrange(7), rng.randrange(2))
        mb = Monomial(rng.randrange(7), rng.randrange(2))
        shifted = build_code(_shift_poly(base.a, ma), _shift_poly(base.b, mb))
        assert (shifted.n, shifted.k) == (base.n, base.k)
        assert exact_distance(shifted, 6).value == d0
