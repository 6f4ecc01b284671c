"""Constant-curvature realisations, metric audit and rendering."""
