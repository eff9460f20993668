import numpy as np
import pytest

from incscc import _kernels_py
from incscc._backend import BACKEND, COMPILED, tarjan_labels
from incscc.synth import random_edge_sequence

try:
    from incscc import _kernels
except ImportError:
    _kernels = None


def test_selected_backend_reported():
    assert BACKEND in ("compiled", "python")
    assert COMPILED == (BACKEND == "compiled")


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
def test_backends_bit_identical(rng):
    for _ in range(60):
        n, seq = random_edge_sequence(40, 200, rng)
        a, na = _kernels.tarjan_labels(n, seq.src, seq.dst)
        b, nb = _kernels_py.tarjan_labels(n, seq.src, seq.dst)
        assert na == nb
        assert np.array_equal(a, b)


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
def test_backends_identical_on_edge_cases():
    cases = [
        (1, [], []),
        (4, [], []),
        (2, [0, 1], [1, 0]),
        (3, [0, 0, 0], [1, 1, 2]),  # parallel arcs
        (3, [0], [0]),  # self-loop tolerated at kernel level
    ]
    for n, src, dst in cases:
        a, na = _kernels.tarjan_labels(n, np.array(src, np.int64),
                                       np.array(dst, np.int64))
        b, nb = _kernels_py.tarjan_labels(n, np.array(src, np.int64),
                                          np.array(dst, np.int64))
        assert na == nb and np.array_equal(a, b)


def test_pure_python_env_override():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c", "from incscc._backend import BACKEND; print(BACKEND)"],
        env={"PATH": "/usr/bin:/bin", "INCSCC_PURE_PYTHON": "1"},
        capture_output=True, text=True)
    assert out.stdout.strip() == "python"
