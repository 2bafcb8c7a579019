"""Exact lattice-simplex geometry: groups, Hermite forms, Gorenstein certificates."""
