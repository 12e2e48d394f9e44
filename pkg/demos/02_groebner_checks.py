"""
Groebner bases by hand: S-polynomials and Buchberger completion
===============================================================

A basis is a Groebner basis exactly when every S-polynomial reduces to
zero against it (Buchberger's criterion).  This script checks a few
bases, completes one that fails, and reduces the result to the unique
reduced basis.
"""

from rmgb import (
    GRLEX,
    buchberger_complete,
    check_basis,
    format_poly,
    ideal_member,
    parse_poly,
    reduce_basis,
    remainder,
    s_polynomial,
)

m = 3
G = [
    parse_poly("x1*x2 + x1 + x2 + 1", m),
    parse_poly("x1*x3 + x1 + x3 + 1", m),
    parse_poly("x2*x3 + x2 + x3 + 1", m),
]

# One S-polynomial, spelled out.
s = s_polynomial(G[0], G[1], GRLEX)
print("S(g1, g2) =", format_poly(s))
print("its remainder mod G:", format_poly(remainder(s, G, GRLEX)), "(zero)")

report = check_basis(G, GRLEX)
print("G is a Groebner basis:", report.is_groebner, "| reduced:", report.is_reduced)

# The square relations xi^2 - 1 form a Groebner basis on their own,
# and so does the union with G.
H = [parse_poly(f"x{i}^2 + 1", m) for i in (1, 2, 3)]
print("H is a Groebner basis:", check_basis(H, GRLEX).is_groebner)
print("G + H is a Groebner basis:", check_basis(G + H, GRLEX).is_groebner)

# A failing pair points at the first S-polynomial with nonzero remainder.
bad = [parse_poly("x1", 2), parse_poly("x1 + x2", 2)]
rep = check_basis(bad, GRLEX)
i, j, witness = rep.failing_pair
print(f"[x1, x1+x2] fails on pair ({i + 1}, {j + 1}), witness", format_poly(witness))

# Buchberger completion fixes it: keep adjoining nonzero S-remainders
# until the criterion holds, then reduce to the canonical form.
completed = buchberger_complete(bad, GRLEX)
reduced = reduce_basis(completed, GRLEX)
print("completed:", [format_poly(p) for p in completed])
print("reduced:  ", [format_poly(p) for p in reduced])
assert check_basis(reduced, GRLEX).is_reduced

# With a Groebner basis in hand, ideal membership is a remainder test.
member = parse_poly("x1*x2*x3 + x1*x2 + x1*x3 + x1", m)  # x1 * g3
print("x1*g3 in <G>:", ideal_member(member, G, GRLEX))
print("x3 in <G>:", ideal_member(parse_poly("x3", m), G, GRLEX))
