"""Writes the golden LP dump for r4_independent.json (traditional mode).

Enumerates the 256 atoms directly as ±1 octuples, independently of the C++
builder, and applies the indicator definition row by row.
"""
from fractions import Fraction
from itertools import product

pairs = [("q1", "c1"), ("q2", "c1"), ("q2", "c2"), ("q3", "c2"),
         ("q3", "c3"), ("q4", "c3"), ("q4", "c4"), ("q1", "c4")]
contexts = [("c1", "q1", "q2"), ("c2", "q2", "q3"), ("c3", "q3", "q4"), ("c4", "q4", "q1")]
connections = [("q1", "c1", "c4"), ("q2", "c1", "c2"), ("q3", "c2", "c3"), ("q4", "c3", "c4")]

# binary counting, -1 -> 0, +1 -> 1, first pair most significant
atoms = list(product((-1, 1), repeat=len(pairs)))


def frac(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def sign(v):
    return "+1" if v > 0 else "-1"


lines = []
for c, a, b in contexts:
    ia, ib = pairs.index((a, c)), pairs.index((b, c))
    for x, y in product((1, -1), repeat=2):
        hits = [i for i, atom in enumerate(atoms) if atom[ia] == x and atom[ib] == y]
        lines.append(f"bunch {c} ({a}={sign(x)},{b}={sign(y)}) : {frac(Fraction(1, 4))} :"
                     + "".join(f" {i}" for i in hits))
for q, c, d in connections:
    ia, ib = pairs.index((q, c)), pairs.index((q, d))
    for s, t in product((1, -1), repeat=2):
        rhs = Fraction(1, 2) if s == t else 0
        hits = [i for i, atom in enumerate(atoms) if atom[ia] == s and atom[ib] == t]
        lines.append(f"connection {q} {c}~{d} ({sign(s)},{sign(t)}) : {frac(rhs)} :"
                     + "".join(f" {i}" for i in hits))

with open("r4_independent_traditional.lpdump", "w") as out:
    out.write("\n".join(lines) + "\n")
