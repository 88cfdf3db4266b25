"""
Self-dual double circulant constructions from cyclotomic classes of order
two: coefficient conditions for self-duality, the GF(2) and GF(4) families,
exhaustive mask search and reproduction of the reference codes.
"""
