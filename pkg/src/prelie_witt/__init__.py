"""Exact graded left-symmetric products on the Witt and Virasoro algebras."""

from .families import (
    AAlpha,
    APrime01,
    BBeta,
    ChapotonA,
    ChapotonB,
    FeiginFuchs,
    Novikov,
    VAlphaEps,
    VBetaK,
    W1,
    make_family,
    verify_module,
)
from .field import ALPHA, EPS, I, GaussianRational, RationalFunction
from .witt import GradedLSA, IndexWindow, Table, verify_lsa

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "EPS",
    "I",
    "AAlpha",
    "APrime01",
    "BBeta",
    "ChapotonA",
    "ChapotonB",
    "FeiginFuchs",
    "GaussianRational",
    "GradedLSA",
    "IndexWindow",
    "Novikov",
    "RationalFunction",
    "Table",
    "VAlphaEps",
    "VBetaK",
    "W1",
    "make_family",
    "verify_lsa",
    "verify_module",
]
