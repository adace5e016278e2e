"""Compressed full-text self-indexes for repetitive texts: run-length BWT
counting, run-sampled locating, a Psi-run suffix array, and subsampled
variants of both that trade locating space for bounded extra walk steps.
"""

from .rcsa import RCsa, build_psi_runs, build_rcsa
from .rindex import RIndex, build_rindex
from .rlbwt import RunLengthBWT, build_rlbwt
from .srcsa import SrCsa, build_srcsa, subsample_rcsa
from .srindex import QueryCounters, SrIndex, build_srindex, subsample, \
    subsample_rindex
from .textcore import Text, build_bundle, ingest, oracle_search
from .toolkit import BuiltIndex, build_index, gen_corpus, load_index, verify

__all__ = [
    "RCsa", "RIndex", "RunLengthBWT", "SrCsa", "SrIndex", "Text",
    "BuiltIndex", "QueryCounters",
    "build_psi_runs", "build_rcsa", "build_rindex", "build_rlbwt",
    "build_srcsa", "build_srindex", "build_bundle", "build_index",
    "gen_corpus", "ingest", "load_index", "oracle_search",
    "subsample", "subsample_rcsa", "subsample_rindex", "verify",
]

__version__ = "0.1.0"
