"""The classical modular inputs: eta quotients, theta functions, Z0hat.

Everything here has two independent constructions that are checked
against each other: the small thetas come from their defining sums, the
capital Thetas from eta quotients, and the rescale q -> q^(1/8) carries
one family onto the other.
"""

from qmock import eta, eta_quotient, theta_big, theta_nullwert, e_star, z0_hat
from qmock.forms import EtaQuotientSpec, theta_big_direct

# Dedekind eta via the pentagonal-number expansion; eta(8 tau)^3 is the
# cube identity in the rescaled variable.
print("eta(tau)      =", eta(1, 4))
print("eta(8 tau)^3  =", eta(8, 60).pow_int(3).truncate(24 * 52))

# The two eta quotients behind the Q+ series.
A = eta_quotient(EtaQuotientSpec(((4, 8), (8, -7))), 18)
B = eta_quotient(EtaQuotientSpec(((8, 5), (16, -4))), 18)
print("eta(4t)^8/eta(8t)^7  =", A.truncate(24 * 16))
print("eta(8t)^5/eta(16t)^4 =", B.truncate(24 * 17))

# Sieving keeps one residue class of exponents: the two pieces used in
# the invariant layer live on 3 mod 8 and 7 mod 8.
print("3 mod 8 part =", A.sieve(3, 8).truncate(24 * 13))
print("7 mod 8 part =", A.sieve(7, 8).truncate(24 * 17))

# Theta null values from their sums ...
for j in (2, 3, 4):
    print(f"theta_{j} =", theta_nullwert(j, 4))

# ... and the capital Thetas from eta quotients, cross-checked against
# their own direct sums.
for j in (2, 3, 4):
    t = theta_big(j, 40)
    assert t.agrees_with(theta_big_direct(j, 40))
    print(f"Theta_{j} =", t.truncate(24 * 30))

# The rescale relations tie the two families together exactly.
order = 16
assert theta_big(2, 8 * order).rescale_exponents(1, 8).scale(2).agrees_with(
    theta_nullwert(2, order)
)
print("theta_2 = 2 Theta_2(tau/8): exact to order", order)

# Jacobi's quartic relation, coefficient by coefficient.
t2, t3, t4 = (theta_nullwert(j, 30) for j in (2, 3, 4))
assert (t2.pow_int(4) + t4.pow_int(4) - t3.pow_int(4)).is_zero()
print("theta_2^4 + theta_4^4 = theta_3^4: exact")

# The weight-2 combination 16 Theta2^4 + Theta3^4 and the weakly
# holomorphic function it generates.
print("E* =", e_star(20))
print("Z0hat =", z0_hat(8))

# Its derivative is proportional to a pure theta/eta quotient; the
# exact constant is -2.
from qmock.uplane import theta_quotient_factor

lhs = z0_hat(13).q_derive().truncate(24 * 12)
rhs = theta_quotient_factor(12)
assert lhs.agrees_with(rhs.scale(-2))
print("q d/dq Z0hat = -2 * Theta4^9/(Theta2 Theta3 eta(8t)^3): exact")
