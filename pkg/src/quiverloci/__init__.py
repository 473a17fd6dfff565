"""Equivariant classes of quiver loci for ADE Dynkin quivers.

The main entry points are ``collapsing.multidegree`` and
``collapsing.kpolynomial``; ``repkit`` and ``schuboracle`` provide
independent checks.
"""
from .collapsing import analyze_orbit, kpolynomial, multidegree
from .polyengine import LaurentPoly, LinearForm, MultiPoly, Reflection, XVar
from .quiverkit import Quiver, default_order, enumerate_orbits, equioriented_a, validate_dynkin

__all__ = [
    "LaurentPoly",
    "LinearForm",
    "MultiPoly",
    "Quiver",
    "Reflection",
    "XVar",
    "analyze_orbit",
    "default_order",
    "enumerate_orbits",
    "equioriented_a",
    "kpolynomial",
    "multidegree",
    "validate_dynkin",
]

__version__ = "0.1.0"
