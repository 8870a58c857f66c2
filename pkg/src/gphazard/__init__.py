"""Nonparametric hazard-rate models on truncated gamma process priors.

Six model families (monotone increasing/decreasing, three bathtub
constructions, and a log-convex form) share a common surface: exact
hazard, cumulative-hazard, density and survival curves, exact
inverse-transform simulation of (possibly censored) failure times,
censored-data likelihood evaluation, and model-free verification tools
(Kaplan-Meier, Kolmogorov-Smirnov).
"""

from .datasets import Dataset, read_dataset_csv, write_dataset_csv
from .gamma_process import (
    BaseMeasure,
    ExponentialBase,
    GammaProcessDraw,
    GammaProcessParams,
    NormalBase,
    OrderedAtoms,
    draw_gamma_process,
    expected_tail_mass,
    stick_weights,
)
from .likelihood import HyperParams, log_hyperprior, log_likelihood, sample_hyperparams
from .models import (
    DecreasingFailureRate,
    HazardModel,
    IncreasingFailureRate,
    LoWengBathtub,
    LogConvexHazard,
    MixtureBathtub,
    SuperpositionBathtub,
    draw_model_params,
    model_from_dict,
    model_to_dict,
    simulate_dataset,
)
from .rng import RandomStream
from .stats import StepFunction, histogram, kaplan_meier, ks_distance

__version__ = "0.1.0"

__all__ = [
    "BaseMeasure",
    "Dataset",
    "DecreasingFailureRate",
    "ExponentialBase",
    "GammaProcessDraw",
    "GammaProcessParams",
    "HazardModel",
    "HyperParams",
    "IncreasingFailureRate",
    "LoWengBathtub",
    "LogConvexHazard",
    "MixtureBathtub",
    "NormalBase",
    "OrderedAtoms",
    "RandomStream",
    "StepFunction",
    "SuperpositionBathtub",
    "draw_gamma_process",
    "draw_model_params",
    "expected_tail_mass",
    "histogram",
    "kaplan_meier",
    "ks_distance",
    "log_hyperprior",
    "log_likelihood",
    "model_from_dict",
    "model_to_dict",
    "read_dataset_csv",
    "sample_hyperparams",
    "simulate_dataset",
    "stick_weights",
    "write_dataset_csv",
]
