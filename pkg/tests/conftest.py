import random

import numpy as np
import pytest

from barcode_strata import _pykernels
from barcode_strata.barcode import Barcode

try:
    from barcode_strata import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

KERNELS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


@pytest.fixture
def tied_barcode():
    """The worked example with tied births and deaths."""
    return Barcode(((1, 10), (2, 5), (4, 5), (4, 7)))


@pytest.fixture
def strict_barcode():
    """Strict barcode with b_3 < b_2 < b_4 < b_1 and d_1 < d_3 < d_4 < d_2."""
    return Barcode.from_arrays((3, 1, 0, 2), (4, 7, 5, 6))


@pytest.fixture(params=KERNELS, ids=lambda k: k.NAME)
def kernels(request, monkeypatch):
    from barcode_strata import metrics
    monkeypatch.setattr(metrics, "kernels", request.param)
    return request.param


def random_barcode(rng: random.Random, n: int, pool: int | None = None) -> Barcode:
    """Uniform bars; with ``pool`` values come from a small integer grid so ties are common."""
    if pool is None:
        births = [rng.random() for _ in range(n)]
        deaths = [b + 1.0 - rng.random() for b in births]
    else:
        births = [float(rng.randrange(pool)) for _ in range(n)]
        deaths = [b + 1 + rng.randrange(pool) for b in births]
    return Barcode.from_arrays(births, deaths)


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_report(request):
    lines = request.config._acceptance_lines

    def report(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        lines.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
