"""
Canonical forms, length and descents for the hyperoctahedral group B_n.

>>> from ogsbn import parse, length, descents
>>> length(parse("tau2*tau3*tau4^3*tau5^2").ogs)
13
"""

from .core import (
    CoxeterWord, RankError, SignedPermutation, compose, embed, eval_word, generator, identity, inverse,
)
from .factor import UvFactorization, uv_factorize
from .metrics import (
    DescentSet, HypothesisError, NormalForm, descent_laws_check, descents, greedy_reduce, length,
    length_sdot, normal_form,
)
from .notation import ElementExpr, ParseError, parse
from .ogs import (
    OgsExponents, TauPower, exchange_report, exchange_tau, from_ogs, tau_apply, tau_power, to_ogs,
)
from .oracle import CayleyTable, VerificationReport, bfs, verify
from .sn import (
    ElementaryFactorization, NotInSdotError, SnOgsExponents, elementary_factorize, exchange_t,
    is_elementary, is_in_sdot, t_to_tau, tau_to_t,
)

__all__ = [
    "CoxeterWord", "RankError", "SignedPermutation", "compose", "embed", "eval_word", "generator",
    "identity", "inverse",
    "UvFactorization", "uv_factorize",
    "DescentSet", "HypothesisError", "NormalForm", "descent_laws_check", "descents", "greedy_reduce",
    "length", "length_sdot", "normal_form",
    "ElementExpr", "ParseError", "parse",
    "OgsExponents", "TauPower", "exchange_report", "exchange_tau", "from_ogs", "tau_apply", "tau_power",
    "to_ogs",
    "CayleyTable", "VerificationReport", "bfs", "verify",
    "ElementaryFactorization", "NotInSdotError", "SnOgsExponents", "elementary_factorize", "exchange_t",
    "is_elementary", "is_in_sdot", "t_to_tau", "tau_to_t",
]
