"""Exact verification of algebraic Painleve VI solutions built from SL2-equivariant instantons."""

from .binary_forms import X, Y, BiForm, Sl2Elem, bracket, cg_components, pairing, sl2_basis, sl2_coords, transvectant
from .exact_core import Poly, RatFun, RootScalar, poly_gcd, ratfun_reduce, root_mul
from .monad import MonadCoeffs, SpaceDims, generate_coeffs, space_dims, verify_monad
from .okamoto import OkamotoOp, apply_word, hierarchy_check, r5, r_reflect
from .pvi import (
    MU,
    ClassicParams,
    NotInCatalog,
    PviSolution,
    Theta,
    catalog,
    d_dt,
    lambda_from_fg,
    pvi_residual,
    t_of_w,
    theta_to_classic,
)
from .report import VerificationReport

__all__ = [
    "BiForm", "Sl2Elem", "X", "Y", "transvectant", "pairing", "bracket", "sl2_basis", "sl2_coords",
    "cg_components", "Poly", "RatFun", "RootScalar", "poly_gcd", "ratfun_reduce", "root_mul",
    "MonadCoeffs", "SpaceDims", "generate_coeffs", "space_dims", "verify_monad",
    "OkamotoOp", "apply_word", "hierarchy_check", "r5", "r_reflect",
    "MU", "ClassicParams", "NotInCatalog", "PviSolution", "Theta", "catalog", "d_dt",
    "lambda_from_fg", "pvi_residual", "t_of_w", "theta_to_classic", "VerificationReport",
]
