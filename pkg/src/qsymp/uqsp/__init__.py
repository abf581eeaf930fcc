"""U_q(sp_2n) data and the suites that check its realization by q-differential operators."""

from .actions import e12_action, e_action, f_action, k_action
from .data import CartanData, CoproductRule, enumerate_positive_roots
from .lemmas import Identity, lemma_battery
from .report import CheckResult, SuiteReport
from .suites import (
    SUITES,
    f_closure_dimension,
    highest_weight_suite,
    lemma_suite,
    module_algebra_suite,
    root_vector_suite,
    run_suite,
    serre_suite,
)

__all__ = [
    "CartanData",
    "CoproductRule",
    "enumerate_positive_roots",
    "CheckResult",
    "SuiteReport",
    "Identity",
    "lemma_battery",
    "e_action",
    "f_action",
    "k_action",
    "e12_action",
    "SUITES",
    "run_suite",
    "serre_suite",
    "module_algebra_suite",
    "highest_weight_suite",
    "root_vector_suite",
    "lemma_suite",
    "f_closure_dimension",
]
