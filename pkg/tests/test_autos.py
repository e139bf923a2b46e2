import json
import random

import pytest

from bbcovers.autos import (
    CodeAutomorphism,
    antipode_zx_duality,
    block_swap_zx_duality,
    compare_base_and_lifted_action,
    compare_base_and_lifted_duality_action,
    duality_action,
    lift_automorphism,
    lift_zx_duality,
    logical_action,
    shift_automorphism,
    tau_lifted_basis,
    verify_automorphism,
    verify_zx_duality,
    y_exponent_swap_automorphism,
)
from bbcovers.codes import (
    Classification,
    LogicalBasis,
    PauliOp,
    Refusal,
    build_code,
    parse_code_spec,
)
from bbcovers.covers import check_cover
from bbcovers.distance import logical_vectors_of_weight
from bbcovers.gf2 import BinMatrix
from bbcovers.rings import Monomial, Poly, parse_poly

BASE_18 = parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2")
COVER_54 = parse_code_spec("l=9 m=3 A=x^3+y+y^2 B=1+x+x^2")
BASE_72 = parse_code_spec("l=6 m=6 A=x^3+y+y^2 B=y^3+x+x^2")
W_54 = check_cover(BASE_18, COVER_54)


def paper_18_basis():
    ctx = BASE_18.ctx
    f, g = parse_poly("1+x", ctx), parse_poly("1+y", ctx)
    ri = [parse_poly(s, ctx) for s in ("1", "y^2", "x", "xy^2")]
    rj = [parse_poly(s, ctx) for s in ("1", "y", "x^2", "x^2y")]
    zero = Poly.zero(ctx)
    xs = tuple([PauliOp("X", r * f, zero) for r in ri] + [PauliOp("X", zero, r * g) for r in rj])
    zs = tuple([PauliOp("Z", r * g, zero) for r in rj] + [PauliOp("Z", zero, r * f) for r in ri])
    return LogicalBasis(xs, zs)


def identity_automorphism(code):
    lm = code.ctx.dim
    return CodeAutomorphism(tuple(range(2 * lm)), BinMatrix.identity(lm), BinMatrix.identity(lm), "tanner")


def cnot_circuit_matrices(k, gates):
    ax = [1 << i for i in range(k)]
    az = [1 << i for i in range(k)]
    for c, t in gates:
        ax[c - 1] ^= 1 << (t - 1)
        az[t - 1] ^= 1 << (c - 1)
    return BinMatrix(k, k, tuple(ax)), BinMatrix(k, k, tuple(az))


def test_identity_automorphism_verifies():
    assert verify_automorphism(BASE_18, identity_automorphism(BASE_18))


def test_y_swap_verifies_on_18():
    assert verify_automorphism(BASE_18, y_exponent_swap_automorphism(BASE_18))


def test_shift_automorphism_on_random_codes():
    rng = random.Random(91)
    from bbcovers.rings import RingContext

    built = 0
    while built < 8:
        l, m = rng.randint(2, 5), rng.randint(2, 5)
        ctx = RingContext(l, m)
        a = Poly.make(ctx, [(rng.randrange(l), rng.randrange(m)) for _ in range(3)])
        b = Poly.make(ctx, [(rng.randrange(l), rng.randrange(m)) for _ in range(3)])
        if a.is_zero() or b.is_zero():
            continue
        code = build_code(a, b)
        mono = Monomial(rng.randrange(l), rng.randrange(m))
        assert verify_automorphism(code, shift_automorphism(code, mono))
        built += 1


def test_y_swap_lifts_to_54():
    aut = y_exponent_swap_automorphism(BASE_18)
    lifted = lift_automorphism(W_54, aut)
    assert verify_automorphism(COVER_54, lifted)
    # block structure: every sheet carries the same base permutation
    lm_b, lm_c = 9, 27
    for j in range(lm_c):
        s, jb = divmod(j, lm_b)
        assert lifted.f[j] == aut.f[jb] + s * lm_b


def test_identity_lifts_to_identity():
    lifted = lift_automorphism(W_54, identity_automorphism(BASE_18))
    assert lifted.f == tuple(range(2 * 27))


def test_cnot_action_matches_circuit():
    aut = y_exponent_swap_automorphism(BASE_18)
    act = logical_action(BASE_18, aut, paper_18_basis())
    eax, eaz = cnot_circuit_matrices(8, [(1, 2), (3, 4), (6, 5), (8, 7)])
    assert act.ax == eax
    assert act.az == eaz


def test_identity_action_is_identity():
    act = logical_action(BASE_18, identity_automorphism(BASE_18), paper_18_basis())
    assert act.ax == BinMatrix.identity(8)
    assert act.az == BinMatrix.identity(8)


def test_action_preserves_pairing():
    aut = y_exponent_swap_automorphism(BASE_18)
    act = logical_action(BASE_18, aut, BASE_18.logical_basis)
    assert act.ax @ act.az.transpose() == BinMatrix.identity(8)


def test_compare_base_and_lifted_cnot_action():
    aut = y_exponent_swap_automorphism(BASE_18)
    lifted = lift_automorphism(W_54, aut)
    assert compare_base_and_lifted_action(W_54, aut, lifted, paper_18_basis())
    assert compare_base_and_lifted_action(W_54, aut, lifted)  # deterministic basis too


def test_compare_identity_trivially_equal():
    aut = identity_automorphism(BASE_18)
    lifted = lift_automorphism(W_54, aut)
    assert compare_base_and_lifted_action(W_54, aut, lifted)


def test_compare_refuses_even_h():
    c36 = parse_code_spec("l=6 m=3 A=x^3+y+y^2 B=1+x+x^2")
    w36 = check_cover(BASE_18, c36)
    aut = y_exponent_swap_automorphism(BASE_18)
    lifted = lift_automorphism(w36, aut)
    with pytest.raises(Refusal, match="odd"):
        compare_base_and_lifted_action(w36, aut, lifted)


def test_tau_lifted_basis_valid_for_odd_h():
    basis = tau_lifted_basis(W_54, paper_18_basis())
    assert basis.pairing_matrix() == BinMatrix.identity(8)
    for op in basis.x_ops + basis.z_ops:
        assert COVER_54.classify(op) == Classification.LOGICAL


def test_block_swap_duality_verifies_on_18():
    assert verify_zx_duality(BASE_18, block_swap_zx_duality(BASE_18))


def test_block_swap_action_is_swap_hadamard():
    zx = block_swap_zx_duality(BASE_18)
    act = duality_action(BASE_18, zx, paper_18_basis())
    j_swap = BinMatrix(8, 8, tuple(1 << ((i + 4) % 8) for i in range(8)))
    assert act.dx == j_swap
    assert act.dz == j_swap


def test_block_swap_duality_lifts_to_self_transpose_cover():
    zx = block_swap_zx_duality(BASE_18)
    alt = parse_code_spec("l=9 m=3 A=1+y+y^2 B=1+x^4+x^5")
    walt = check_cover(BASE_18, alt)
    assert walt.h == 3 and alt.k == 8
    lifted = lift_zx_duality(walt, zx)
    assert verify_zx_duality(alt, lifted)
    # lifted qubit permutation is the swap of the enlarged blocks
    lm_c = alt.ctx.dim
    assert lifted.f == tuple(list(range(lm_c, 2 * lm_c)) + list(range(lm_c)))
    assert compare_base_and_lifted_duality_action(walt, zx, lifted, paper_18_basis())


def test_block_swap_lift_to_printed_cover_refused():
    # neither printed lattice reading gives self-transpose polynomials, so
    # the identity-witness block swap is not a duality there
    zx = block_swap_zx_duality(BASE_18)
    with pytest.raises(Refusal):
        lift_zx_duality(W_54, zx)
    w36 = check_cover(BASE_18, parse_code_spec("l=6 m=3 A=x^3+y+y^2 B=1+x+x^2"))
    with pytest.raises(Refusal):
        lift_zx_duality(w36, zx)


def test_antipode_duality_is_universal():
    rng = random.Random(97)
    from bbcovers.rings import RingContext

    built = 0
    while built < 6:
        l, m = rng.randint(2, 5), rng.randint(2, 5)
        ctx = RingContext(l, m)
        a = Poly.make(ctx, [(rng.randrange(l), rng.randrange(m)) for _ in range(3)])
        b = Poly.make(ctx, [(rng.randrange(l), rng.randrange(m)) for _ in range(3)])
        if a.is_zero() or b.is_zero():
            continue
        code = build_code(a, b)
        assert verify_zx_duality(code, antipode_zx_duality(code))
        built += 1


def test_automorphism_preserves_min_weight_logicals():
    # relabeling by a verified automorphism maps the weight-d logical set to
    # itself, so the exact distance is invariant
    aut = y_exponent_swap_automorphism(BASE_18)
    from bbcovers.autos import _apply_perm_vec

    for basis, weight in (("Z", 2), ("X", 2)):
        for v in logical_vectors_of_weight(BASE_18, basis, weight):
            image = _apply_perm_vec(aut.f, v)
            assert image.bit_count() == weight
            assert BASE_18.classify_vector(basis, image) == Classification.LOGICAL


def test_automorphism_json_round_trip():
    aut = y_exponent_swap_automorphism(BASE_18)
    data = json.loads(json.dumps(aut.to_json()))
    again = CodeAutomorphism.from_json(data)
    assert again == aut
    assert verify_automorphism(BASE_18, again)


def test_shape_mismatch_refused():
    aut = identity_automorphism(BASE_18)
    with pytest.raises(Refusal):
        verify_automorphism(BASE_72, aut)
