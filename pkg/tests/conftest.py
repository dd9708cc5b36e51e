import random

import pytest

from dedekind_ehrhart import _kernels


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request, monkeypatch):
    """Run a test once per available kernel backend."""
    monkeypatch.setattr(_kernels, "BACKEND", request.param)
    return request.param


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Andrew's monotone chain, CCW, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def random_convex_polygons(count, seed=0, max_coord=20, max_vertices=15):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        npts = rng.randint(3, 30)
        pts = [(rng.randint(0, max_coord), rng.randint(0, max_coord)) for _ in range(npts)]
        hull = convex_hull(pts)
        if 3 <= len(hull) <= max_vertices:
            out.append(hull)
    return out


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {detail}")
