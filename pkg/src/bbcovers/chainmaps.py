"""Projection and lifting chain maps between a cover and its base code.

The projection p sends a cover monomial x^a y^b to x^(a mod l) y^(b mod m);
the lifting map tau = p^T sends a base monomial to the sum of its fiber.
Both extend to chain maps of the code complexes (degreewise p, p(+)p, p) and
therefore act on logical operators.  Sections of the covering give
weight-preserving lifts, which certify distance upper bounds when they land
on nontrivial logicals.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .codes import BBCode, Classification, InternalConsistencyError, PauliOp, Refusal
from .covers import CoverWitness
from .distance import DistanceResult
from .gf2 import BinMatrix
from .rings import Monomial, Poly


@dataclass(frozen=True)
class ChainMap:
    """Degreewise matrices of a (co)chain map between two code complexes."""

    direction: str  # "projection" (cover->base) or "lift" (base->cover)
    deg2: BinMatrix
    deg1: BinMatrix
    deg0: BinMatrix
    source: BBCode
    target: BBCode


@dataclass(frozen=True)
class HomologyMap:
    """Induced map on logical classes, in the deterministic bases of each code."""

    matrix: BinMatrix  # k_target x k_source
    side: str  # "Z" (homology) or "X" (cohomology)
    source: BBCode
    target: BBCode


def projection_matrix(witness: CoverWitness) -> BinMatrix:
    """p: F2^(l~ m~) -> F2^(lm) on check/monomial spaces."""
    base, cover = witness.base, witness.cover
    rows = [0] * base.ctx.dim
    for mono in cover.ctx.monomials():
        j = cover.ctx.index(mono.a, mono.b)
        rows[base.ctx.index(mono.a % base.l, mono.b % base.m)] |= 1 << j
    return BinMatrix(base.ctx.dim, cover.ctx.dim, tuple(rows))


def _block_diag(p: BinMatrix) -> BinMatrix:
    zero_tr = BinMatrix.zeros(p.n_rows, p.n_cols)
    return p.hstack(zero_tr).vstack(zero_tr.hstack(p))


def _verify_squares(cm: ChainMap) -> None:
    """All four commuting squares (chain and cochain diagrams), exactly."""
    if cm.direction == "projection":
        cov, base = cm.source, cm.target
        hzt_c, hzt_b = cov.hz_t, base.hz_t
        hxt_c, hxt_b = cov.hx_t, base.hx_t
        checks = [
            (cm.deg1 @ hzt_c, hzt_b @ cm.deg2, "deg1 . H~_Z^T == H_Z^T . deg2"),
            (cm.deg0 @ cov.hx, base.hx @ cm.deg1, "deg0 . H~_X == H_X . deg1"),
            (cm.deg1 @ hxt_c, hxt_b @ cm.deg0, "deg1 . H~_X^T == H_X^T . deg0"),
            (cm.deg2 @ cov.hz, base.hz @ cm.deg1, "deg2 . H~_Z == H_Z . deg1"),
        ]
    else:
        base, cov = cm.source, cm.target
        hzt_c, hzt_b = cov.hz_t, base.hz_t
        hxt_c, hxt_b = cov.hx_t, base.hx_t
        checks = [
            (hzt_c @ cm.deg2, cm.deg1 @ hzt_b, "H~_Z^T . deg2 == deg1 . H_Z^T"),
            (cov.hx @ cm.deg1, cm.deg0 @ base.hx, "H~_X . deg1 == deg0 . H_X"),
            (hxt_c @ cm.deg0, cm.deg1 @ hxt_b, "H~_X^T . deg0 == deg1 . H_X^T"),
            (cov.hz @ cm.deg1, cm.deg2 @ base.hz, "H~_Z . deg1 == deg2 . H_Z"),
        ]
    for left, right, name in checks:
        if left != right:
            raise InternalConsistencyError(f"chain-map square failed: {name}")


def projection_map(witness: CoverWitness) -> ChainMap:
    """The chain map p_* : cover -> base, with commutativity verified."""
    p = projection_matrix(witness)
    cm = ChainMap("projection", p, _block_diag(p), p, witness.cover, witness.base)
    _verify_squares(cm)
    return cm


def lifting_map(witness: CoverWitness) -> ChainMap:
    """The chain map tau_* : base -> cover; exactly the transpose of p_*."""
    p = projection_matrix(witness)
    tau = p.transpose()
    cm = ChainMap("lift", tau, _block_diag(tau), tau, witness.base, witness.cover)
    _verify_squares(cm)
    return cm


def compose_p_tau(witness: CoverWitness) -> str:
    """p . tau equals the identity for odd h and zero for even h."""
    p = projection_matrix(witness)
    prod = p @ p.transpose()
    if prod == BinMatrix.identity(witness.base.ctx.dim):
        result = "identity"
    elif prod.is_zero():
        result = "zero"
    else:
        raise InternalConsistencyError("p . tau is neither identity nor zero")
    expected = "identity" if witness.h % 2 == 1 else "zero"
    if result != expected:
        raise InternalConsistencyError(f"p . tau = {result}, expected {expected} for h={witness.h}")
    return result


# --- polynomials under p and tau ---------------------------------------------

def project_poly(witness: CoverWitness, p: Poly) -> Poly:
    """Termwise exponent reduction into the base ring."""
    base = witness.base
    return Poly.make(base.ctx, [(t.a, t.b) for t in p.terms])


def lift_poly(witness: CoverWitness, p: Poly) -> Poly:
    """Termwise fiber sum into the cover ring; weight multiplies by h."""
    base, cover = witness.base, witness.cover
    terms = []
    for t in p.terms:
        for i in range(witness.u):
            for j in range(witness.t):
                terms.append((t.a + base.l * i, t.b + base.m * j))
    return Poly.make(cover.ctx, terms)


@dataclass(frozen=True)
class ClassifiedOp:
    op: PauliOp
    classification: Classification


def project_logical(witness: CoverWitness, op: PauliOp) -> ClassifiedOp:
    """Apply p termwise to a cover logical; classification is in the base code."""
    if witness.cover.syndrome(op) != 0:
        raise Refusal("operator is not in the cover code's kernel")
    out = PauliOp(op.basis, project_poly(witness, op.left), project_poly(witness, op.right))
    return ClassifiedOp(out, witness.base.classify(out))


def lift_logical(witness: CoverWitness, op: PauliOp) -> ClassifiedOp:
    """Apply tau termwise to a base logical; weight is h times the input's."""
    if witness.base.syndrome(op) != 0:
        raise Refusal("operator is not in the base code's kernel")
    out = PauliOp(op.basis, lift_poly(witness, op.left), lift_poly(witness, op.right))
    if out.weight != witness.h * op.weight:
        raise InternalConsistencyError("lifted weight is not h times the base weight")
    return ClassifiedOp(out, witness.cover.classify(out))


# --- induced maps on logical classes -------------------------------------------

def induced_homology_map(cm: ChainMap, side: str = "Z") -> HomologyMap:
    """Images of the source logical basis expressed in the target basis.

    Column j holds the coordinates of the image of the j-th source basis
    class; images are reduced modulo the target's stabilizers.
    """
    src, tgt = cm.source, cm.target
    ops = src.logical_basis.z_ops if side == "Z" else src.logical_basis.x_ops
    coords = []
    for op in ops:
        image = cm.deg1.mul_vec(op.support_vector())
        if tgt.syndrome_vector(side, image) != 0:
            raise InternalConsistencyError("chain-map image left the target kernel")
        coords.append(tgt.z_class_coords(image) if side == "Z" else tgt.x_class_coords(image))
    k_t = tgt.k
    rows = [0] * k_t
    for j, c in enumerate(coords):
        for i in range(k_t):
            if (c >> i) & 1:
                rows[i] |= 1 << j
    return HomologyMap(BinMatrix(k_t, len(ops), tuple(rows)), side, src, tgt)


# --- distance bounds -----------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """Distance bounds transported along a cover witness."""

    h: int
    base_distance: int
    upper_bound: int  # h * d, from a concrete lifted logical
    upper_witness: PauliOp
    upper_witness_classification: Classification
    lower_bound: int | None  # d when h is odd and k_h = k
    conjectural: bool  # even h: the bounds are observed, not proven

    def as_dict(self) -> dict:
        return {
            "h": self.h,
            "base_distance": self.base_distance,
            "upper_bound": self.upper_bound,
            "upper_witness": str(self.upper_witness),
            "upper_witness_classification": self.upper_witness_classification.value,
            "lower_bound": self.lower_bound,
            "conjectural": self.conjectural,
        }


def distance_bounds(witness: CoverWitness, base_d: DistanceResult, cover_k: int) -> BoundReport:
    """Bounds on the cover distance from the base distance.

    Odd h gives d_h <= h*d with the tau-lift of a base minimum-weight logical
    as witness; odd h with k_h = k adds d <= d_h.  For even h the same
    inequalities are reported but flagged as conjectural.
    """
    if base_d.kind != "exact" or base_d.witness is None:
        raise Refusal("distance bounds need an exact base distance with a witness")
    h = witness.h
    lifted = lift_logical(witness, base_d.witness)
    lower = None
    if h % 2 == 1 and cover_k == witness.base.k:
        lower = base_d.value
    return BoundReport(
        h=h,
        base_distance=base_d.value,
        upper_bound=h * base_d.value,
        upper_witness=lifted.op,
        upper_witness_classification=lifted.classification,
        lower_bound=lower,
        conjectural=h % 2 == 0,
    )


# --- sections and weight-preserving lifts ---------------------------------------

@dataclass(frozen=True)
class Section:
    """Sheet choice (gamma, delta) per base monomial; a one-point fiber pick."""

    witness: CoverWitness
    offsets: tuple[tuple[Monomial, tuple[int, int]], ...]

    def lift_mono(self, mono: Monomial) -> Monomial:
        base = self.witness.base
        for m, (g, d) in self.offsets:
            if m == mono:
                return Monomial(mono.a + base.l * g, mono.b + base.m * d)
        raise Refusal(f"section has no sheet assignment for {mono.render()}")

    def apply(self, p: Poly) -> Poly:
        cover = self.witness.cover
        return Poly.make(cover.ctx, [self.lift_mono(t) for t in p.terms])


def constant_section(witness: CoverWitness, g: int, d: int) -> Section:
    """The section shifting every base monomial to the same sheet."""
    offsets = tuple((mono, (g, d)) for mono in witness.base.ctx.monomials())
    return Section(witness, offsets)


def section_chain_map_commutes(witness: CoverWitness, g: int, d: int) -> bool:
    """Whether the constant-offset section forms a chain map base -> cover.

    Constant sections are multiplication by x^(lg) y^(md) composed with the
    exponent embedding; they are the one family where commutativity is
    mechanically decidable, so only they are checked here.
    """
    base, cover = witness.base, witness.cover
    sec = constant_section(witness, g, d)
    rows = [0] * cover.ctx.dim
    for mono in base.ctx.monomials():
        j = base.ctx.index(mono.a, mono.b)
        lifted = sec.lift_mono(mono)
        rows[cover.ctx.index(lifted.a, lifted.b)] |= 1 << j
    sigma = BinMatrix(cover.ctx.dim, base.ctx.dim, tuple(rows))
    sigma1 = _block_diag(sigma)
    left_square = cover.hz_t @ sigma == sigma1 @ base.hz_t
    right_square = cover.hx @ sigma1 == sigma @ base.hx
    return left_square and right_square


def weight_preserving_lift_search(
    witness: CoverWitness, op: PauliOp, limit: int = 1 << 20
) -> list[ClassifiedOp]:
    """Classify every weight-preserving lift of a base logical operator.

    Enumerates all h^w sheet assignments over the support and returns the
    candidates that are nontrivial logicals of the cover; any hit certifies
    d_h <= w.  Refuses when h^w exceeds the budget.
    """
    if witness.base.classify(op) != Classification.LOGICAL:
        raise Refusal("weight-preserving lifts are searched for nontrivial base logicals only")
    h = witness.h
    w = op.weight
    total = h**w
    if total > limit:
        raise Refusal(f"section space h^w = {total} exceeds the budget {limit}")
    base, cover = witness.base, witness.cover
    support = [("L", t) for t in op.left.terms] + [("R", t) for t in op.right.terms]
    sheet_choices = [(i, j) for i in range(witness.u) for j in range(witness.t)]
    hits = []
    for assignment in product(sheet_choices, repeat=w):
        left_terms, right_terms = [], []
        for (block, term), (g, d) in zip(support, assignment):
            lifted = (term.a + base.l * g, term.b + base.m * d)
            (left_terms if block == "L" else right_terms).append(lifted)
        cand = PauliOp(
            op.basis,
            Poly.make(cover.ctx, left_terms),
            Poly.make(cover.ctx, right_terms),
        )
        if cand.weight != w:
            raise InternalConsistencyError("sheet assignment collapsed the support")
        if cover.classify(cand) == Classification.LOGICAL:
            hits.append(ClassifiedOp(cand, Classification.LOGICAL))
    return hits


def classical_inherited_check(code: BBCode, op: PauliOp) -> bool:
    """Whether a single-block operator lies in its classical code's kernel.

    The zero-syndrome condition for X(p, q) is Bp + Aq = 0 and for Z(p, q)
    it is A^T p + B^T q = 0, so single-block operators are kernel vectors of
    one classical check polynomial: Z-left against A^T, Z-right against B^T,
    X-left against B, X-right against A.
    """
    if not op.left.is_zero() and not op.right.is_zero():
        raise Refusal("classical inheritance applies to single-block operators only")
    if op.basis == "Z":
        matrix_poly = code.a.transpose() if op.right.is_zero() else code.b.transpose()
    else:
        matrix_poly = code.b if op.right.is_zero() else code.a
    block = op.left if op.right.is_zero() else op.right
    return (matrix_poly * block).is_zero()
