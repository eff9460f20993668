"""Incremental strongly connected components with predictions.

Core pieces: a prediction-augmented incremental SCC structure
(LearnedIncScc), the offline divide-and-conquer index it derives from
(OfflineSccIndex), an IncSCC+ topological-ordering baseline (IncSccPlus),
a brute-force oracle, and a benchmark harness with a CLI (`incscc`).
"""

from incscc._backend import BACKEND, COMPILED
from incscc.baseline import IncSccPlus
from incscc.graph import Edge, EdgeSequence, SccPartition, edge_errors, tarjan_scc
from incscc.harness import (PerturbConfig, RunRecord, ingest, perturb,
                            run_experiment, verify, write_csv)
from incscc.labels import NodeLabels
from incscc.learned import LearnedIncScc
from incscc.offline import OfflineSccIndex
from incscc.oracle import check_equivalence, combining_time, scc_snapshots
from incscc.prediction import Prediction

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "COMPILED",
    "Edge",
    "EdgeSequence",
    "SccPartition",
    "edge_errors",
    "tarjan_scc",
    "NodeLabels",
    "LearnedIncScc",
    "OfflineSccIndex",
    "IncSccPlus",
    "Prediction",
    "PerturbConfig",
    "RunRecord",
    "ingest",
    "perturb",
    "run_experiment",
    "verify",
    "write_csv",
    "check_equivalence",
    "combining_time",
    "scc_snapshots",
    "__version__",
]
