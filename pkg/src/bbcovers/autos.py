"""CSS code automorphisms, ZX-dualities, their lifts, and logical actions.

Automorphisms are supplied rather than discovered: verification, sheet-wise
lifting along a cover witness, and logical-action computation are offered for
given candidates, with the shift family and two worked constructions built in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    BBCode,
    Classification,
    InternalConsistencyError,
    LogicalBasis,
    PauliOp,
    Refusal,
    pairing_matrix,
)
from .covers import CoverWitness
from .chainmaps import lift_poly, projection_matrix, _block_diag
from .gf2 import BinMatrix
from .rings import Monomial


def _perm_matrix(perm: tuple[int, ...]) -> BinMatrix:
    n = len(perm)
    rows = [0] * n
    for j, i in enumerate(perm):
        rows[i] |= 1 << j
    return BinMatrix(n, n, tuple(rows))


@dataclass(frozen=True)
class CodeAutomorphism:
    """Qubit permutation f with check transformations W_X, W_Z.

    The permutation is stored as an image map: qubit j goes to qubit f[j].
    Kind "tanner" additionally promises W_X and W_Z are permutation matrices.
    """

    f: tuple[int, ...]
    w_x: BinMatrix
    w_z: BinMatrix
    kind: str = "general"

    def f_matrix(self) -> BinMatrix:
        return _perm_matrix(self.f)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "f": list(self.f),
            "w_x": self.w_x.to_text(),
            "w_z": self.w_z.to_text(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeAutomorphism":
        return cls(
            tuple(data["f"]),
            BinMatrix.from_text(data["w_x"]),
            BinMatrix.from_text(data["w_z"]),
            data.get("kind", "general"),
        )


@dataclass(frozen=True)
class ZXDuality:
    """Chain map from a code to its dual complex, swapping X and Z sectors."""

    f: tuple[int, ...]
    w_x: BinMatrix  # deg0 -> dual deg... maps X-check space to Z-check space
    w_z: BinMatrix  # maps Z-check space to X-check space

    def f_matrix(self) -> BinMatrix:
        return _perm_matrix(self.f)


def verify_automorphism(code: BBCode, aut: CodeAutomorphism) -> bool:
    """Check W_X H_X = H_X f and H_Z^T W_Z = f H_Z^T exactly; W's must be invertible."""
    if len(aut.f) != code.n or aut.w_x.n_cols != code.ctx.dim or aut.w_z.n_cols != code.ctx.dim:
        raise Refusal("automorphism shapes do not match the code")
    fm = aut.f_matrix()
    if aut.kind == "tanner":
        if not (aut.w_x.is_permutation() and aut.w_z.is_permutation()):
            return False
    elif aut.w_x.rank() != code.ctx.dim or aut.w_z.rank() != code.ctx.dim:
        return False
    if aut.w_x @ code.hx != code.hx @ fm:
        return False
    hzt = code.hz_t
    return hzt @ aut.w_z == fm @ hzt


def verify_zx_duality(code: BBCode, dual: ZXDuality) -> bool:
    """Check f H_Z^T = H_X^T W_Z and W_X H_X = H_Z f exactly; W's must be invertible."""
    if len(dual.f) != code.n:
        raise Refusal("duality shapes do not match the code")
    if dual.w_x.rank() != code.ctx.dim or dual.w_z.rank() != code.ctx.dim:
        return False
    fm = dual.f_matrix()
    left = fm @ code.hz_t == code.hx_t @ dual.w_z
    right = dual.w_x @ code.hx == code.hz @ fm
    return left and right


# --- built-in constructions -----------------------------------------------------

def shift_automorphism(code: BBCode, mono: Monomial) -> CodeAutomorphism:
    """Shift all check and qubit labels by a monomial; works on every BB code."""
    ctx = code.ctx
    lm = ctx.dim
    table = [0] * lm
    for m in ctx.monomials():
        table[ctx.index(m.a, m.b)] = ctx.index(m.a + mono.a, m.b + mono.b)
    perm = tuple(table) + tuple(lm + i for i in table)
    w = _perm_matrix(tuple(table))
    return CodeAutomorphism(perm, w, w, kind="tanner")


def y_exponent_swap_automorphism(code: BBCode, b0: int = 0, b1: int = 1) -> CodeAutomorphism:
    """Relabel monomials by swapping two y-exponents on checks and both blocks.

    This is a Tanner-graph automorphism for codes whose polynomials make the
    two exponents interchangeable; callers should verify it.
    """
    ctx = code.ctx
    lm = ctx.dim

    def sigma(b: int) -> int:
        if b == b0:
            return b1
        if b == b1:
            return b0
        return b

    table = [ctx.index(m.a, sigma(m.b)) for m in ctx.monomials()]
    block = [table[ctx.index(m.a, m.b)] for m in ctx.monomials()]
    perm = tuple(block) + tuple(lm + i for i in block)
    w = _perm_matrix(tuple(block))
    return CodeAutomorphism(perm, w, w, kind="tanner")


def block_swap_zx_duality(code: BBCode) -> ZXDuality:
    """f swaps the left and right qubit blocks, W_X = W_Z = I.

    A ZX-duality exactly when A and B are self-transpose; callers verify.
    """
    lm = code.ctx.dim
    perm = tuple(lm + i for i in range(lm)) + tuple(range(lm))
    ident = BinMatrix.identity(lm)
    return ZXDuality(perm, ident, ident)


def antipode_zx_duality(code: BBCode) -> ZXDuality:
    """Block swap composed with exponent negation; a duality of every BB code."""
    ctx = code.ctx
    lm = ctx.dim
    neg = [ctx.index(-m.a, -m.b) for m in ctx.monomials()]
    perm = tuple(lm + neg[i] for i in range(lm)) + tuple(neg[i] for i in range(lm))
    w = _perm_matrix(tuple(neg))
    return ZXDuality(perm, w, w)


# --- lifting along a cover -------------------------------------------------------

def _lift_index_map(witness: CoverWitness) -> tuple[list[int], list[list[int]]]:
    """For each cover monomial index: its base index and sheet slot."""
    base, cover = witness.base, witness.cover
    base_of = []
    sheets_of_base: list[list[int]] = [[] for _ in range(base.ctx.dim)]
    for mono in cover.ctx.monomials():
        j = cover.ctx.index(mono.a, mono.b)
        bi = base.ctx.index(mono.a % base.l, mono.b % base.m)
        base_of.append(bi)
        sheets_of_base[bi].append(j)
    return base_of, sheets_of_base


def _lift_check_matrix(witness: CoverWitness, w: BinMatrix) -> BinMatrix:
    """Sheet-wise block lift: repeat the base map on every sheet."""
    base, cover = witness.base, witness.cover
    l, m = base.l, base.m
    lm_c = cover.ctx.dim
    rows = [0] * lm_c
    for mono in cover.ctx.monomials():
        j = cover.ctx.index(mono.a, mono.b)
        jb = base.ctx.index(mono.a % l, mono.b % m)
        s1, s2 = mono.a // l, mono.b // m
        col = w.column(jb)
        x = col
        while x:
            ib = (x & -x).bit_length() - 1
            bmono = base.ctx.monomial_at(ib)
            rows[cover.ctx.index(bmono.a + l * s1, bmono.b + m * s2)] |= 1 << j
            x &= x - 1
    return BinMatrix(lm_c, lm_c, tuple(rows))


def _lift_qubit_perm(witness: CoverWitness, f: tuple[int, ...]) -> tuple[int, ...]:
    base, cover = witness.base, witness.cover
    l, m = base.l, base.m
    lm_b, lm_c = base.ctx.dim, cover.ctx.dim
    out = [0] * (2 * lm_c)
    for mono in cover.ctx.monomials():
        j = cover.ctx.index(mono.a, mono.b)
        jb = base.ctx.index(mono.a % l, mono.b % m)
        s1, s2 = mono.a // l, mono.b // m
        for block in (0, 1):
            image = f[block * lm_b + jb]
            img_block, img_idx = divmod(image, lm_b)
            bmono = base.ctx.monomial_at(img_idx)
            lifted = cover.ctx.index(bmono.a + l * s1, bmono.b + m * s2)
            out[block * lm_c + j] = img_block * lm_c + lifted
    return tuple(out)


def _check_intertwining(witness: CoverWitness, base_m: BinMatrix, lifted_m: BinMatrix) -> bool:
    p = projection_matrix(witness)
    if base_m.n_cols == 2 * witness.base.ctx.dim:
        p = _block_diag(p)
    return p @ lifted_m == base_m @ p


def lift_automorphism(witness: CoverWitness, aut: CodeAutomorphism) -> CodeAutomorphism:
    """Sheet-wise lift; verified as a cover automorphism intertwining with p."""
    if not verify_automorphism(witness.base, aut):
        raise Refusal("the supplied automorphism does not verify on the base code")
    lifted = CodeAutomorphism(
        _lift_qubit_perm(witness, aut.f),
        _lift_check_matrix(witness, aut.w_x),
        _lift_check_matrix(witness, aut.w_z),
        kind=aut.kind,
    )
    if not verify_automorphism(witness.cover, lifted):
        raise Refusal("sheet-wise lift is not an automorphism of the cover code")
    ok = (
        _check_intertwining(witness, aut.f_matrix(), lifted.f_matrix())
        and _check_intertwining(witness, aut.w_x, lifted.w_x)
        and _check_intertwining(witness, aut.w_z, lifted.w_z)
    )
    if not ok:
        raise InternalConsistencyError("lift does not intertwine with the projection")
    return lifted


def lift_zx_duality(witness: CoverWitness, dual: ZXDuality) -> ZXDuality:
    """Sheet-wise lift of a ZX-duality; verified on the cover."""
    if not verify_zx_duality(witness.base, dual):
        raise Refusal("the supplied duality does not verify on the base code")
    lifted = ZXDuality(
        _lift_qubit_perm(witness, dual.f),
        _lift_check_matrix(witness, dual.w_x),
        _lift_check_matrix(witness, dual.w_z),
    )
    if not verify_zx_duality(witness.cover, lifted):
        raise Refusal("sheet-wise lift is not a ZX-duality of the cover code")
    ok = (
        _check_intertwining(witness, dual.f_matrix(), lifted.f_matrix())
        and _check_intertwining(witness, dual.w_x, lifted.w_x)
        and _check_intertwining(witness, dual.w_z, lifted.w_z)
    )
    if not ok:
        raise InternalConsistencyError("lift does not intertwine with the projection")
    return lifted


# --- logical actions --------------------------------------------------------------

@dataclass(frozen=True)
class LogicalAction:
    """k x k matrices of an automorphism on X and Z logical classes.

    Row i of ax holds the coordinates of the image of the i-th X basis class;
    az likewise for Z.  Pairing preservation forces ax az^T = I.
    """

    ax: BinMatrix
    az: BinMatrix


@dataclass(frozen=True)
class DualityAction:
    """Class maps of a ZX-duality: X classes land in the Z basis and dually."""

    dx: BinMatrix  # X basis -> Z-class coordinates
    dz: BinMatrix  # Z basis -> X-class coordinates


def _apply_perm_vec(perm: tuple[int, ...], v: int) -> int:
    out = 0
    while v:
        j = (v & -v).bit_length() - 1
        out |= 1 << perm[j]
        v &= v - 1
    return out


def logical_action(code: BBCode, aut: CodeAutomorphism, basis: LogicalBasis) -> LogicalAction:
    """Action on logical classes relative to the given paired basis."""
    if pairing_matrix(basis.x_ops, basis.z_ops) != BinMatrix.identity(basis.k):
        raise Refusal("logical action needs a symplectically paired basis")
    ax_rows, az_rows = [], []
    for op in basis.x_ops:
        image = _apply_perm_vec(aut.f, op.support_vector())
        if code.syndrome_vector("X", image) != 0:
            raise Refusal("automorphism image left the kernel; not a valid automorphism")
        ax_rows.append(code.x_class_coords(image))
    for op in basis.z_ops:
        image = _apply_perm_vec(aut.f, op.support_vector())
        if code.syndrome_vector("Z", image) != 0:
            raise Refusal("automorphism image left the kernel; not a valid automorphism")
        az_rows.append(code.z_class_coords(image))
    k = basis.k
    ax = _coords_rows_to_matrix(ax_rows, code, basis, "X")
    az = _coords_rows_to_matrix(az_rows, code, basis, "Z")
    if ax @ az.transpose() != BinMatrix.identity(k):
        raise InternalConsistencyError("action does not preserve the symplectic pairing")
    return LogicalAction(ax, az)


def _coords_rows_to_matrix(code_coords: list[int], code: BBCode, basis: LogicalBasis, side: str) -> BinMatrix:
    """Convert class coordinates (in the code's deterministic basis) to the
    caller's basis by a change of basis."""
    k = basis.k
    ops = basis.x_ops if side == "X" else basis.z_ops
    change_rows = []
    for op in ops:
        v = op.support_vector()
        change_rows.append(
            code.x_class_coords(v) if side == "X" else code.z_class_coords(v)
        )
    change = BinMatrix(k, code.k, tuple(change_rows))  # caller basis in code basis
    coords = BinMatrix(len(code_coords), code.k, tuple(code_coords))
    # solve rows: coords = result @ change  =>  result = coords * change^{-1}
    inv = _invert(change)
    return coords @ inv


def _invert(m: BinMatrix) -> BinMatrix:
    if m.n_rows != m.n_cols:
        raise Refusal("cannot invert a non-square matrix")
    n = m.n_rows
    aug = [row | (1 << (n + i)) for i, row in enumerate(m.rows)]
    pivots = {}
    for r in aug:
        v = r
        while v & ((1 << n) - 1):
            c = (v & -v).bit_length() - 1
            if c in pivots:
                v ^= pivots[c]
            else:
                pivots[c] = v
                break
    if len(pivots) != n:
        raise Refusal("matrix is singular over GF(2)")
    # back-substitute to reduced form
    cols = sorted(pivots, reverse=True)
    for c in cols:
        row = pivots[c]
        for c2, r2 in list(pivots.items()):
            if c2 != c and (r2 >> c) & 1:
                pivots[c2] = r2 ^ row
    inv_rows = [pivots[c] >> n for c in sorted(pivots)]
    return BinMatrix(n, n, tuple(inv_rows))


def duality_action(code: BBCode, dual: ZXDuality, basis: LogicalBasis) -> DualityAction:
    """Class maps of a duality: X images in the Z basis, Z images in the X basis."""
    if pairing_matrix(basis.x_ops, basis.z_ops) != BinMatrix.identity(basis.k):
        raise Refusal("duality action needs a symplectically paired basis")
    dx_rows, dz_rows = [], []
    for op in basis.x_ops:
        image = _apply_perm_vec(dual.f, op.support_vector())
        if code.syndrome_vector("Z", image) != 0:
            raise Refusal("duality image of an X logical is not a Z-kernel vector")
        dx_rows.append(code.z_class_coords(image))
    for op in basis.z_ops:
        image = _apply_perm_vec(dual.f, op.support_vector())
        if code.syndrome_vector("X", image) != 0:
            raise Refusal("duality image of a Z logical is not an X-kernel vector")
        dz_rows.append(code.x_class_coords(image))
    dx = _coords_rows_to_matrix(dx_rows, code, basis, "Z")
    dz = _coords_rows_to_matrix(dz_rows, code, basis, "X")
    return DualityAction(dx, dz)


# --- base vs lifted comparison ------------------------------------------------------

def tau_lifted_basis(witness: CoverWitness, base_basis: LogicalBasis) -> LogicalBasis:
    """Lift a paired base basis through tau; valid when h is odd and k_h = k."""
    if witness.h % 2 == 0:
        raise Refusal("tau-lifted bases exist for odd h only (pairing degenerates mod 2)")
    cover = witness.cover
    if cover.k != witness.base.k:
        raise Refusal(f"k_h = {cover.k} != k = {witness.base.k}; lifted set is not a basis")
    x_ops = tuple(
        PauliOp("X", lift_poly(witness, op.left), lift_poly(witness, op.right))
        for op in base_basis.x_ops
    )
    z_ops = tuple(
        PauliOp("Z", lift_poly(witness, op.left), lift_poly(witness, op.right))
        for op in base_basis.z_ops
    )
    lifted = LogicalBasis(x_ops, z_ops)
    if pairing_matrix(x_ops, z_ops) != BinMatrix.identity(base_basis.k):
        raise InternalConsistencyError("tau-lifted basis does not pair as identity")
    for op in x_ops + z_ops:
        if cover.classify(op) != Classification.LOGICAL:
            raise InternalConsistencyError("tau-lifted operator is not a nontrivial logical")
    return lifted


def compare_base_and_lifted_action(
    witness: CoverWitness,
    aut: CodeAutomorphism,
    lifted_aut: CodeAutomorphism,
    base_basis: LogicalBasis | None = None,
) -> bool:
    """Base action in a base basis equals the lifted action in the tau-lifted basis.

    Requires odd h and k_h = k, the hypothesis under which the lifted basis is
    a basis at all; refuses otherwise.
    """
    if witness.h % 2 == 0:
        raise Refusal("comparison hypothesis unmet: h must be odd")
    if witness.cover.k != witness.base.k:
        raise Refusal("comparison hypothesis unmet: k_h must equal k")
    basis = base_basis if base_basis is not None else witness.base.logical_basis
    lifted_basis = tau_lifted_basis(witness, basis)
    base_action = logical_action(witness.base, aut, basis)
    cover_action = logical_action(witness.cover, lifted_aut, lifted_basis)
    return base_action.ax == cover_action.ax and base_action.az == cover_action.az


def compare_base_and_lifted_duality_action(
    witness: CoverWitness,
    dual: ZXDuality,
    lifted_dual: ZXDuality,
    base_basis: LogicalBasis | None = None,
) -> bool:
    """Duality counterpart of compare_base_and_lifted_action."""
    if witness.h % 2 == 0:
        raise Refusal("comparison hypothesis unmet: h must be odd")
    if witness.cover.k != witness.base.k:
        raise Refusal("comparison hypothesis unmet: k_h must equal k")
    basis = base_basis if base_basis is not None else witness.base.logical_basis
    lifted_basis = tau_lifted_basis(witness, basis)
    base_action = duality_action(witness.base, dual, basis)
    cover_action = duality_action(witness.cover, lifted_dual, lifted_basis)
    return base_action.dx == cover_action.dx and base_action.dz == cover_action.dz
