"""Relative homology with finite coefficients and the resulting state spaces.

Run with `python3 notebooks/02_homology_and_state_spaces.py`.
"""

from gctqft.cellular import relative_homology
from gctqft.corpus import complexes
from gctqft.tqft import induced_hom, induced_hom_explicit

named = {c.name: c for c in complexes()}

# The torus has H_1 = G x G.
torus = named["torus"]
for orders in [(2,), (3,), (2, 2)]:
    X = torus.complex
    H = relative_homology(X.full(), None, 1, orders)
    print(f"H_1(torus; Z/{orders}) = {H.describe()}")

# A bordism induces a matrix between state spaces. Two independent routes
# (counting preimages and summing over explicit maps) agree exactly.
sphere = named["sphere"]
for spec in sphere.bordisms:
    b = sphere.bordism(spec, 1, (3,))
    M = induced_hom(b)
    assert M == induced_hom_explicit(b)
    print(f"sphere/{spec['name']} over Z/3, n = 1:\n{M.counts}")
