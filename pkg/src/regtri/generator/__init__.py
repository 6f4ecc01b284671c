"""Layered discs, their vertex counts and the Euler-characteristic audit."""
