"""Lift code automorphisms along a cover and compare logical actions.

A verified base automorphism lifts sheet-wise; when h is odd and k_h = k the
tau-lifted logical basis is a genuine basis and the lifted automorphism acts
on it by exactly the same symplectic matrices as the base automorphism.
"""

from bbcovers import (
    LogicalBasis,
    PauliOp,
    Poly,
    block_swap_zx_duality,
    check_cover,
    compare_base_and_lifted_action,
    compare_base_and_lifted_duality_action,
    duality_action,
    lift_automorphism,
    lift_zx_duality,
    logical_action,
    parse_code_spec,
    parse_poly,
    verify_automorphism,
    verify_zx_duality,
    y_exponent_swap_automorphism,
)

base = parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2")
ctx = base.ctx

# the published symplectic basis: four pairs from 1+x, four from 1+y
f, g = parse_poly("1+x", ctx), parse_poly("1+y", ctx)
ri = [parse_poly(s, ctx) for s in ("1", "y^2", "x", "xy^2")]
rj = [parse_poly(s, ctx) for s in ("1", "y", "x^2", "x^2y")]
zero = Poly.zero(ctx)
basis = LogicalBasis(
    tuple([PauliOp("X", r * f, zero) for r in ri] + [PauliOp("X", zero, r * g) for r in rj]),
    tuple([PauliOp("Z", r * g, zero) for r in rj] + [PauliOp("Z", zero, r * f) for r in ri]),
)

aut = y_exponent_swap_automorphism(base)
print("y-exponent swap verifies:", verify_automorphism(base, aut))
act = logical_action(base, aut, basis)
print("action on X classes (rows = images):")
print(act.ax)
print("this is the symplectic matrix of CNOT(1,2) CNOT(3,4) CNOT(6,5) CNOT(8,7)")
print()

cover = parse_code_spec("l=9 m=3 A=x^3+y+y^2 B=1+x+x^2")
w = check_cover(base, cover)
lifted = lift_automorphism(w, aut)
print(f"lifted to the [[{cover.n},{cover.k}]] triple cover; actions equal:",
      compare_base_and_lifted_action(w, aut, lifted, basis))
print()

zx = block_swap_zx_duality(base)
print("block-swap ZX-duality verifies:", verify_zx_duality(base, zx))
dact = duality_action(base, zx, basis)
print("X classes land on Z classes as a swap-transversal Hadamard:")
print(dact.dx)

# lifting needs self-transpose cover polynomials; this 3-cover has them
alt = parse_code_spec("l=9 m=3 A=1+y+y^2 B=1+x^4+x^5")
walt = check_cover(base, alt)
lifted_zx = lift_zx_duality(walt, zx)
print(f"duality lifts to [[{alt.n},{alt.k}]]; actions equal:",
      compare_base_and_lifted_duality_action(walt, zx, lifted_zx, basis))
