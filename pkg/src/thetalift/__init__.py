"""Exact theta lifts from O*(2) and O*(4) to Sp(p,q)."""
from .core import (
    GroupSig, HCParam, InfChar, LanglandsParam, PosSystem, Scalar, ThetaError,
    canonicalize, equal_mod_weyl, fmt_param, make_param, validate,
)
from .ostar_dual import OStar2Rep, OStar4Rep, make as make_rep
from .lifts import ZERO, LiftResult, theta, theta_ostar2, theta_ostar4

__version__ = "0.1.0"
