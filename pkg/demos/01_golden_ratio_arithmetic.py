"""
Exact arithmetic with the golden ratio
======================================

Coordinates of the non-crystallographic groups H2, H3 and H4 live in the
field Q(tau).  Every number is a + b*tau with rational a, b, so nothing is
ever rounded.
"""

from fractions import Fraction

from orbitkit.scalar import TAU, QTau, parse_qtau

# tau satisfies tau^2 = tau + 1
print("tau^2         =", TAU * TAU)
print("tau^2 - tau   =", TAU * TAU - TAU)

# the conjugate tau' = 1 - tau is the other root; the norm is x * x'
x = QTau(3, -2)
print("x             =", x)
print("conjugate     =", x.conjugate())
print("norm          =", x.norm())
print("1/x           =", x.inverse(), " check:", x * x.inverse())

# the text form round-trips
print("parsed        =", parse_qtau("1/2 + 3/4*t"))

# Sign is decided exactly, even next to a near cancellation.
# Ratios of consecutive Fibonacci numbers approach tau from both sides.
fib = [1, 1]
while len(fib) < 40:
    fib.append(fib[-1] + fib[-2])
for n in (10, 11, 37, 38):
    d = TAU - QTau(Fraction(fib[n + 1], fib[n]))
    print(f"tau - {fib[n + 1]}/{fib[n]}: sign {d.sign():+d}, about {float(d):.3e}")
