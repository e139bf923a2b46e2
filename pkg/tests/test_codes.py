import pytest

from bbcovers.codes import (
    Classification,
    PauliOp,
    Refusal,
    build_code,
    pairing_matrix,
    parse_code_spec,
    parse_pauli,
)
from bbcovers.gf2 import BinMatrix
from bbcovers.rings import Monomial, Poly, RingContext, parse_poly

CODE_72 = "l=6 m=6 A=x^3+y+y^2 B=y^3+x+x^2"
CODE_18 = "l=3 m=3 A=1+y+y^2 B=1+x+x^2"
GROSS = "l=12 m=6 A=x^3+y+y^2 B=y^3+x+x^2"
CODE_24_W8 = "l=6 m=2 A=1+x^5+x^3+x^5y B=y+x^2y+x^5y+x^3"


def test_build_72():
    code = parse_code_spec(CODE_72)
    assert code.n == 72 and code.check_weight == 6


def test_build_degenerate_two_qubit():
    code = build_code("1", "1", 1, 1)
    assert code.n == 2
    assert code.hx == BinMatrix.from_rows([[1, 1]])
    assert code.k == 0
    assert code.logical_basis.k == 0


def test_build_weight8():
    code = parse_code_spec(CODE_24_W8)
    assert code.n == 24 and code.check_weight == 8 and code.k == 10


def test_css_condition_and_rank_symmetry():
    for spec in (CODE_72, CODE_18, GROSS, CODE_24_W8):
        code = parse_code_spec(spec)
        assert code.hx.mul(code.hz.transpose()).is_zero()
        assert code.hx.rank() == code.hz.rank()


def test_k_values():
    assert parse_code_spec(CODE_72).k == 12
    assert parse_code_spec(GROSS).k == 12
    assert parse_code_spec(CODE_18).k == 8


def test_k_matches_homology_dimension():
    for spec in (CODE_18, CODE_72, CODE_24_W8):
        code = parse_code_spec(spec)
        assert code.k == code.hx.kernel_basis().n_rows - code.hz.rank()


def test_rank_value_via_k():
    # k = n - 2 rank(H_Z)
    assert parse_code_spec(CODE_72).hz.rank() == 30
    assert parse_code_spec(CODE_18).hz.rank() == 5
    assert parse_code_spec(CODE_18).hx.kernel_basis().n_rows == 13


def test_stabilizer_support_x():
    code = parse_code_spec(CODE_72)
    supp = code.stabilizer_support(Monomial(0, 0), "X")
    assert supp.left == code.a and supp.right == code.b


def test_stabilizer_support_z_transposes():
    code = parse_code_spec(CODE_72)
    supp = code.stabilizer_support(Monomial(0, 0), "Z")
    assert supp.left == parse_poly("y^3+x^5+x^4", code.ctx)
    assert supp.right == parse_poly("x^3+y^5+y^4", code.ctx)


def test_stabilizer_support_shift():
    code = parse_code_spec(CODE_18)
    supp = code.stabilizer_support(Monomial(1, 0), "X")
    assert supp.left == code.a.shift(Monomial(1, 0))


def test_support_rows_match_check_matrices():
    code = parse_code_spec(CODE_18)
    for mono in code.ctx.monomials():
        r = code.ctx.index(mono.a, mono.b)
        assert code.stabilizer_support(mono, "X").support_vector() == code.hx.rows[r]
        assert code.stabilizer_support(mono, "Z").support_vector() == code.hz.rows[r]


def test_syndrome_zero_op():
    code = parse_code_spec(CODE_72)
    zero = PauliOp("Z", Poly.zero(code.ctx), Poly.zero(code.ctx))
    assert code.syndrome(zero) == 0


def test_syndrome_of_stabilizer_rows():
    code = parse_code_spec(CODE_72)
    for r in (0, 7, 35):
        op = PauliOp.from_vector("Z", code.ctx, code.hz.rows[r])
        assert code.syndrome(op) == 0
        assert code.classify(op) == Classification.STABILIZER


def test_single_qubit_syndrome_weight_is_column_weight():
    code = parse_code_spec(CODE_72)
    op = parse_pauli("X(1|0)", code.ctx)
    syn = code.syndrome(op)
    assert syn != 0
    assert syn.bit_count() == code.hz.column(0).bit_count() == 3


def test_classify_examples():
    c72 = parse_code_spec(CODE_72)
    f_prime = parse_pauli("X(1+x+x^2+x^3+xy^3+x^5y^3|0)", c72.ctx)
    assert c72.classify(f_prime) == Classification.LOGICAL
    full_check = PauliOp("X", c72.a, c72.b)
    assert c72.classify(full_check) == Classification.STABILIZER
    assert c72.classify(parse_pauli("X(x|0)", c72.ctx)) == Classification.NOT_IN_KERNEL


def test_f_prime_not_in_x_stabilizer_row_space():
    c72 = parse_code_spec(CODE_72)
    v = parse_pauli("X(1+x+x^2+x^3+xy^3+x^5y^3|0)", c72.ctx).support_vector()
    assert not c72.hx.in_row_space(v)


def test_logical_basis_pairs_as_identity():
    for spec in (CODE_18, CODE_72, CODE_24_W8):
        code = parse_code_spec(spec)
        basis = code.logical_basis
        assert basis.k == code.k
        assert basis.pairing_matrix() == BinMatrix.identity(code.k)
        for op in basis.x_ops + basis.z_ops:
            assert code.syndrome(op) == 0
            assert code.classify(op) == Classification.LOGICAL


def paper_18_basis(code):
    ctx = code.ctx
    f, g = parse_poly("1+x", ctx), parse_poly("1+y", ctx)
    ri = [parse_poly(s, ctx) for s in ("1", "y^2", "x", "xy^2")]
    rj = [parse_poly(s, ctx) for s in ("1", "y", "x^2", "x^2y")]
    zero = Poly.zero(ctx)
    xs = [PauliOp("X", r * f, zero) for r in ri] + [PauliOp("X", zero, r * g) for r in rj]
    zs = [PauliOp("Z", r * g, zero) for r in rj] + [PauliOp("Z", zero, r * f) for r in ri]
    return xs, zs


def test_published_18_basis_classifies_and_pairs():
    code = parse_code_spec(CODE_18)
    xs, zs = paper_18_basis(code)
    for op in xs + zs:
        assert code.classify(op) == Classification.LOGICAL
    assert pairing_matrix(xs, zs) == BinMatrix.identity(8)


def test_parse_code_spec_round_trip():
    code = parse_code_spec(CODE_72)
    again = parse_code_spec(code.spec_line())
    assert again == code


def test_parse_code_spec_errors():
    with pytest.raises(Refusal):
        parse_code_spec("l=3 m=3 A=1+y+y^2")
    with pytest.raises(Refusal):
        parse_code_spec("junk")


def test_parse_pauli_round_trip():
    ctx = RingContext(4, 4)
    op = parse_pauli("X(1+xy|y^3)", ctx)
    assert op.basis == "X" and op.weight == 3
    assert parse_pauli(str(op), ctx) == op
