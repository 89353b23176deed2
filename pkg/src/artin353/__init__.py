"""Coxeter and Artin complexes, Salvetti complexes, Garside normal forms,
353 square and simplicial complexes, and B-geodesics on finite windows."""

from .coxeter import CoxeterGroup, enumerate_group
from .diagram import CoxeterDiagram
from .garside import ArtinGroup, GarsideNormalForm, normal_form
from .verdict import Verdict

__all__ = [
    "ArtinGroup",
    "CoxeterDiagram",
    "CoxeterGroup",
    "GarsideNormalForm",
    "Verdict",
    "enumerate_group",
    "normal_form",
]
__version__ = "0.1.0"
