"""Registry of binomial-sum identities and the machinery that checks them."""

from .harness import (
    Counterexample,
    IdentityReport,
    Summary,
    render_reports,
    sample_reports,
    search_counterexample,
    summarize,
    sweep,
    verify,
)
from .params import ParamPoint
from .registry import REGISTRY, Evaluation, Identity, UnknownIdentity, binomial_sum, get_identity
from .specs import Sampler, SpecError, expand_grid, load_document

__all__ = [
    "Counterexample",
    "Evaluation",
    "Identity",
    "IdentityReport",
    "ParamPoint",
    "REGISTRY",
    "Sampler",
    "SpecError",
    "Summary",
    "UnknownIdentity",
    "binomial_sum",
    "expand_grid",
    "get_identity",
    "load_document",
    "render_reports",
    "sample_reports",
    "search_counterexample",
    "summarize",
    "sweep",
    "verify",
]
