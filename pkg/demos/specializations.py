"""How T reduces to the ribbon and classical polynomials.

Setting t = 1 gives the Bollobas-Riordan polynomial of the jacket.  Also
setting z = 1 leaves sum (x-1)^(r(G)-r(H)) y^n(H), which is the Tutte
polynomial only after y -> y - 1, since Tutte weights nullity by (y-1).
"""
from tensorpoly import load_fixture, t_polynomial
from tensorpoly.graph import tutte
from tensorpoly.polynomial import Y
from tensorpoly.ribbon import br_polynomial

G = load_fixture("fig8")
T = t_polynomial(G)
tut = tutte(G.underlying_multigraph())

print("T(x,y,z,t)     =", T)
print("T(x,y,z,1)     =", T.substitute({"t": 1}))
print("BR(jacket)     =", br_polynomial(G.jacket()))
print()
print("T(x,y,1,1)     =", T.substitute({"z": 1, "t": 1}))
print("T(x,y-1,1,1)   =", T.substitute({"z": 1, "t": 1, "y": Y - 1}))
print("Tutte(x,y)     =", tut)
