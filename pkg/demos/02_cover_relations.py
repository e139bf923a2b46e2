"""Decide when one code's Tanner graph covers another's.

The relation is purely algebraic: lattice parameters must divide and every
defining term must reduce, exponentwise, to a distinct base term.  The
witness is cross-checked against an explicit voltage-graph construction.
"""

from bbcovers import (
    CoverRefusal,
    build_derived_graph,
    build_tanner_graph,
    check_cover,
    parse_code_spec,
    verify_cover_isomorphism,
)

base = parse_code_spec("l=6 m=6 A=x^3+y+y^2 B=y^3+x+x^2")
big = parse_code_spec("l=12 m=6 A=x^3+y+y^2 B=y^3+x+x^2")

w = check_cover(base, big)
print(f"[[{big.n},{big.k}]] is an h={w.h} cover of [[{base.n},{base.k}]] (u={w.u}, t={w.t})")
print("term matching for A:", [(c.render(), b.render()) for c, b in w.a_matching])

tanner = build_tanner_graph(big)
derived = build_derived_graph(base, w)
print(f"cover Tanner graph: {tanner.n_checks} checks, {tanner.n_qubits} qubits, "
      f"{len(tanner.edges)} edges")
print(f"derived graph has the same size: {len(derived.vertices)} vertices, "
      f"{len(derived.edges)} edges")
print("explicit graph isomorphism verified:", verify_cover_isomorphism(base, big, w))
print()

# the same polynomials over incompatible lattice parameters are refused
try:
    check_cover(base, parse_code_spec("l=9 m=6 A=x^3+y+y^2 B=y^3+x+x^2"))
except CoverRefusal as exc:
    print("refused as expected:", exc)

# one code can be a cover at several heights depending on the lattice reading
small = parse_code_spec("l=3 m=3 A=1+y+y^2 B=1+x+x^2")
for lt in (6, 9):
    cand = parse_code_spec(f"l={lt} m=3 A=x^3+y+y^2 B=1+x+x^2")
    w2 = check_cover(small, cand)
    print(f"(l={lt}, m=3): h={w2.h} cover with n={cand.n}, k={cand.k}")
