"""Bivariate bicycle code construction, parameters and logical operators.

A code Q(A, B, l, m) has lm X-checks, lm Z-checks and n = 2lm qubits split
into a left and a right block, with

    H_X = (A | B),    H_Z = (B^T | A^T),

where a polynomial names its matrix in the row-support orientation of
Poly.to_matrix: row r of H_X is the support (rA | rB) of the X-check
labelled r, and row r of H_Z is (rB^T | rA^T).  Qubit index convention:
left-block qubit x^a y^b sits at a*m + b, right-block qubits follow at
lm + a*m + b.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .gf2 import BinMatrix, RowBasis, RowReducer
from .rings import ContextMismatch, Poly, PolyParseError, RingContext, Monomial, parse_poly


class InternalConsistencyError(RuntimeError):
    """A structural identity that the construction guarantees has failed."""


class Refusal(ValueError):
    """A precondition on the requested operation does not hold."""


class Classification(enum.Enum):
    NOT_IN_KERNEL = "not-in-kernel"
    STABILIZER = "stabilizer"
    LOGICAL = "nontrivial-logical"


@dataclass(frozen=True)
class PauliOp:
    """X(left|right) or Z(left|right): one Pauli type supported on two qubit blocks."""

    basis: str  # "X" or "Z"
    left: Poly
    right: Poly

    def __post_init__(self) -> None:
        if self.basis not in ("X", "Z"):
            raise ValueError(f"basis must be X or Z, got {self.basis!r}")
        if self.left.ctx != self.right.ctx:
            raise ContextMismatch("left/right blocks over different rings")

    @property
    def ctx(self) -> RingContext:
        return self.left.ctx

    @property
    def weight(self) -> int:
        return self.left.weight + self.right.weight

    def support_vector(self) -> int:
        """Bitmask over 2lm qubits, right block shifted by lm."""
        return self.left.to_vector() | (self.right.to_vector() << self.ctx.dim)

    @classmethod
    def from_vector(cls, basis: str, ctx: RingContext, v: int) -> "PauliOp":
        mask = (1 << ctx.dim) - 1
        return cls(basis, Poly.from_vector(ctx, v & mask), Poly.from_vector(ctx, v >> ctx.dim))

    def __str__(self) -> str:
        return f"{self.basis}({self.left}|{self.right})"


def parse_pauli(text: str, ctx: RingContext) -> PauliOp:
    """Parse 'X(<poly>|<poly>)' / 'Z(<poly>|<poly>)'."""
    s = text.strip()
    if len(s) < 4 or s[0] not in "XZ" or s[1] != "(" or s[-1] != ")":
        raise PolyParseError("expected X(<poly>|<poly>) or Z(<poly>|<poly>)", 0)
    body = s[2:-1]
    if body.count("|") != 1:
        raise PolyParseError("expected exactly one '|' separator", 2)
    left, right = body.split("|")
    return PauliOp(s[0], parse_poly(left, ctx), parse_poly(right, ctx))


class BBCode:
    """An immutable code instance with cached parity checks and parameters."""

    def __init__(self, a: Poly, b: Poly, *, _skip_check: bool = False) -> None:
        if a.ctx != b.ctx:
            raise ContextMismatch("A and B over different rings")
        if a.is_zero() or b.is_zero():
            raise Refusal("defining polynomials must be nonempty")
        self.ctx = a.ctx
        self.a = a
        self.b = b
        ma, mb = a.to_matrix(), b.to_matrix()
        mat, mbt = a.transpose().to_matrix(), b.transpose().to_matrix()
        self.hx = ma.hstack(mb)
        self.hz = mbt.hstack(mat)
        if not _skip_check and not self.hx.mul(self.hz.transpose()).is_zero():
            raise InternalConsistencyError("H_X H_Z^T != 0; construction is broken")

    # -- identity ------------------------------------------------------------

    @property
    def l(self) -> int:
        return self.ctx.l

    @property
    def m(self) -> int:
        return self.ctx.m

    @property
    def n(self) -> int:
        return 2 * self.ctx.dim

    def spec_line(self) -> str:
        return f"l={self.l} m={self.m} A={self.a} B={self.b}"

    def __repr__(self) -> str:
        return f"BBCode({self.spec_line()})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BBCode)
            and self.ctx == other.ctx
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.a.terms, self.b.terms))

    # -- parameters ----------------------------------------------------------

    @cached_property
    def hx_t(self) -> BinMatrix:
        return self.hx.transpose()

    @cached_property
    def hz_t(self) -> BinMatrix:
        return self.hz.transpose()

    @cached_property
    def rank_hz(self) -> int:
        rz = self.hz.rank()
        rx = self.hx.rank()
        if rx != rz:
            raise InternalConsistencyError(f"rank H_X = {rx} != rank H_Z = {rz}")
        return rz

    @property
    def k(self) -> int:
        return self.n - 2 * self.rank_hz

    @property
    def check_weight(self) -> int:
        return self.a.weight + self.b.weight

    # -- stabilizers and classification ---------------------------------------

    @cached_property
    def _x_stab_reducer(self) -> RowReducer:
        """Row space of H_X: the X-stabilizer supports."""
        return RowReducer(self.n, self.hx.rows)

    @cached_property
    def _z_stab_reducer(self) -> RowReducer:
        return RowReducer(self.n, self.hz.rows)

    def stabilizer_support(self, r: Monomial, basis: str) -> PauliOp:
        """Support of the X or Z check labelled by the monomial r."""
        rp = Poly.make(self.ctx, [r])
        if basis == "X":
            return PauliOp("X", rp * self.a, rp * self.b)
        if basis == "Z":
            return PauliOp("Z", rp * self.b.transpose(), rp * self.a.transpose())
        raise ValueError(f"basis must be X or Z, got {basis!r}")

    def syndrome(self, op: PauliOp) -> int:
        """H_Z v for X-type ops, H_X v for Z-type; zero iff the op commutes."""
        v = op.support_vector()
        h = self.hz if op.basis == "X" else self.hx
        return h.mul_vec(v)

    def syndrome_vector(self, basis: str, v: int) -> int:
        h = self.hz if basis == "X" else self.hx
        return h.mul_vec(v)

    def classify_vector(self, basis: str, v: int) -> Classification:
        if self.syndrome_vector(basis, v) != 0:
            return Classification.NOT_IN_KERNEL
        stab = self._x_stab_reducer if basis == "X" else self._z_stab_reducer
        if stab.contains(v):
            return Classification.STABILIZER
        return Classification.LOGICAL

    def classify(self, op: PauliOp) -> Classification:
        if op.ctx != self.ctx:
            raise ContextMismatch("operator ring does not match code ring")
        return self.classify_vector(op.basis, op.support_vector())

    # -- logical basis ---------------------------------------------------------

    @cached_property
    def logical_basis(self) -> "LogicalBasis":
        return _symplectic_basis(self)

    def x_class_coords(self, v: int) -> int:
        """Coordinates of an X-type kernel vector in the X logical basis."""
        return self._class_expressor("X").coords(v)

    def z_class_coords(self, v: int) -> int:
        return self._class_expressor("Z").coords(v)

    def _class_expressor(self, basis: str) -> "_ClassExpressor":
        if basis == "X":
            if "_x_expr" not in self.__dict__:
                self.__dict__["_x_expr"] = _ClassExpressor(
                    self.hx.rows, [op.support_vector() for op in self.logical_basis.x_ops], self.n
                )
            return self.__dict__["_x_expr"]
        if "_z_expr" not in self.__dict__:
            self.__dict__["_z_expr"] = _ClassExpressor(
                self.hz.rows, [op.support_vector() for op in self.logical_basis.z_ops], self.n
            )
        return self.__dict__["_z_expr"]


def build_code(a: str | Poly, b: str | Poly, l: int | None = None, m: int | None = None) -> BBCode:
    """Build Q(A, B, l, m); string polynomials are parsed over (l, m)."""
    if isinstance(a, str) or isinstance(b, str):
        if l is None or m is None:
            raise Refusal("l and m are required when passing polynomial strings")
        ctx = RingContext(l, m)
        a = parse_poly(a, ctx) if isinstance(a, str) else a
        b = parse_poly(b, ctx) if isinstance(b, str) else b
    return BBCode(a, b)


def parse_code_spec(line: str) -> BBCode:
    """Parse the one-line format 'l=<uint> m=<uint> A=<poly> B=<poly>'."""
    fields: dict[str, str] = {}
    last_key: str | None = None
    for chunk in line.split():
        if "=" not in chunk:
            # rendered polynomials carry spaces around '+'; glue those chunks
            # back onto the value being built
            if last_key is None:
                raise Refusal(f"malformed code spec near {chunk!r}")
            fields[last_key] += chunk
            continue
        key, _, val = chunk.partition("=")
        last_key = key
        fields[key] = val
    missing = {"l", "m", "A", "B"} - fields.keys()
    if missing:
        raise Refusal(f"code spec missing fields: {sorted(missing)}")
    try:
        l, m = int(fields["l"]), int(fields["m"])
        ctx = RingContext(l, m)
    except ValueError as exc:
        raise Refusal(f"bad lattice parameter: {exc}") from exc
    return BBCode(parse_poly(fields["A"], ctx), parse_poly(fields["B"], ctx))


@dataclass(frozen=True)
class LogicalBasis:
    """k symplectically paired X and Z logical representatives."""

    x_ops: tuple[PauliOp, ...]
    z_ops: tuple[PauliOp, ...]

    @property
    def k(self) -> int:
        return len(self.x_ops)

    def pairing_matrix(self) -> BinMatrix:
        return pairing_matrix(self.x_ops, self.z_ops)


def pairing_matrix(x_ops, z_ops) -> BinMatrix:
    """Symplectic overlap parity matrix between two operator lists."""
    zv = [op.support_vector() for op in z_ops]
    rows = []
    for xop in x_ops:
        x = xop.support_vector()
        rows.append(sum(((x & z).bit_count() & 1) << j for j, z in enumerate(zv)))
    return BinMatrix(len(rows), len(zv), tuple(rows))


def _coset_reps(kernel: BinMatrix, stab_rows, n: int, k: int) -> list[int]:
    """First k kernel rows that are independent modulo the stabilizer span."""
    red = RowReducer(n, stab_rows)
    reps = []
    for v in kernel.rows:
        if red.add(v):
            reps.append(v)
            if len(reps) == k:
                break
    return reps

def _symplectic_basis(code: BBCode) -> LogicalBasis:
    """Deterministic paired basis via symplectic Gram-Schmidt.

    X representatives come from kernel_basis(H_Z) reduced modulo rows of H_X
    (Z reps dually), taken in kernel order; pairs are then peeled off
    front-first, correcting the remaining vectors so the pairing is exactly
    I_k.
    """
    k = code.k
    if k == 0:
        return LogicalBasis((), ())
    x_reps = _coset_reps(code.hz.kernel_basis(), code.hx.rows, code.n, k)
    z_reps = _coset_reps(code.hx.kernel_basis(), code.hz.rows, code.n, k)
    if len(x_reps) != k or len(z_reps) != k:
        raise InternalConsistencyError("logical representative count does not match k")
    xs: list[int] = []
    zs: list[int] = []
    pool_x, pool_z = list(x_reps), list(z_reps)
    while pool_x:
        x = pool_x.pop(0)
        hit = next((i for i, z in enumerate(pool_z) if (x & z).bit_count() & 1), None)
        if hit is None:
            raise InternalConsistencyError("symplectic pairing failed; degenerate pairing")
        z = pool_z.pop(hit)
        pool_x = [p ^ x if (p & z).bit_count() & 1 else p for p in pool_x]
        pool_z = [p ^ z if (p & x).bit_count() & 1 else p for p in pool_z]
        xs.append(x)
        zs.append(z)
    x_ops = tuple(PauliOp.from_vector("X", code.ctx, v) for v in xs)
    z_ops = tuple(PauliOp.from_vector("Z", code.ctx, v) for v in zs)
    basis = LogicalBasis(x_ops, z_ops)
    ident = BinMatrix.identity(k)
    if basis.pairing_matrix() != ident:
        raise InternalConsistencyError("constructed basis does not pair as identity")
    for op in x_ops + z_ops:
        if code.classify(op) != Classification.LOGICAL:
            raise InternalConsistencyError("basis operator is not a nontrivial logical")
    return basis


class _ClassExpressor:
    """Expresses kernel vectors as stabilizers plus logical basis combinations."""

    def __init__(self, stab_rows, basis_vectors, n: int) -> None:
        self._rb = RowBasis(n)
        self._n_stab = len(stab_rows)
        for r in stab_rows:
            self._rb.add(r)
        for v in basis_vectors:
            self._rb.add(v)

    def coords(self, v: int) -> int:
        combo = self._rb.express(v)
        if combo is None:
            raise Refusal("vector is not in the kernel of the relevant check matrix")
        return combo >> self._n_stab
