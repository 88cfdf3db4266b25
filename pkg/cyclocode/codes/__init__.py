"""
Linear codes over GF(l): double circulant generators, rank and dual
computation, self-duality, minimum distance and self-dual distance bounds.
"""
