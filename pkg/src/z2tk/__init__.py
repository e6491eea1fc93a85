"""Exact-arithmetic toolkit for a Z2 x Z2-graded N=2 supersymmetry algebra.

Core layers:

* :mod:`z2tk.scalars` - Gaussian rationals and bivariate rational functions
* :mod:`z2tk.grading` - Z2 x Z2 degrees and the commutation sign rule
* :mod:`z2tk.algebra` - generators, the 21 defining relations, verifier
* :mod:`z2tk.reps` - the 32- and 16-dimensional induced modules
* :mod:`z2tk.modtools` - exact subspace tools: closure, basis change, probes
* :mod:`z2tk.mech` - graded-commutative fields, variations, Noether charges
* :mod:`z2tk.service` - FastAPI layer exposing every verification verb
* :mod:`z2tk.cli` - thin command-line client of the service
"""

__version__ = "0.1.0"
