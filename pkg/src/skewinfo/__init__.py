"""Wigner-Yanase skew information and sum uncertainty bounds for observables and channels."""

from .channel_bounds import (
    ChannelBoundReport,
    channel_report,
    fu_two_channel,
    normalize_kraus_counts,
    thm3_bound,
    thm3_value,
    thm4_bound,
    thm4_value,
    two_channel_identity,
)
from .linalg import Tolerances, commutator, frobenius_norm, hermitian_eig, matrix_sqrt_psd
from .observable_bounds import (
    ObservableBoundReport,
    lb_gram,
    lb_pairwise,
    lb_tight,
    lb_two_observables,
    report,
    sum_skew,
    two_observable_identity,
)
from .skew import DensityState, KrausChannel, Observable, skew_channel, skew_observable, skew_operator

__version__ = "0.1.0"
