"""Composing bordisms and gluing along corners.

Run with `python3 notebooks/03_gluing.py`.
"""

from gctqft.corpus import complexes, load_gluings
from gctqft.tqft import BordismData, compose_check, glue_compare

# The circle read as a bordism from itself to itself, composed with itself,
# violates the surjectivity criterion; the glued map is |G| times the composite.
C = next(c.complex for c in complexes() if c.name == "circle")
for orders in [(2,), (3,)]:
    first = BordismData(C.full(), C.empty(), C.full(), 0, orders)
    second = BordismData(C.full(), C.full(), C.empty(), 0, orders)
    glued = BordismData(C.full(), C.empty(), C.empty(), 0, orders)
    print(f"Z/{orders}:", compose_check(first, second, glued).verdict())

# Algebraic gluing (a coend over the corner) versus the geometric glued space.
for obj, d in load_gluings():
    r = glue_compare(d, (2,))
    print(f"{obj['name']}: iso = {r.iso}, defect = {r.defect}")
