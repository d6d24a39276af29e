import itertools

import pytest

from fencekit.quiver import FenceQuiver, star_quiver
from fencekit.young import block_compatible, compositions_of, partitions


def _q(heads, tails, arrows):
    return FenceQuiver(tuple(heads), tuple(tails), tuple(arrows))


# (name, quiver, dims); every entry has at most 8 matrix entries in total
CORPUS = [
    ("arrow-1x1", _q("h", "t", [("t", "h")]), {"h": 1, "t": 1}),
    ("arrow-2x2", _q("h", "t", [("t", "h")]), {"h": 2, "t": 2}),
    ("arrow-2x3", _q("h", "t", [("t", "h")]), {"h": 2, "t": 3}),
    ("arrow-3x2", _q("h", "t", [("t", "h")]), {"h": 3, "t": 2}),
    ("star-1;1,1", star_quiver(2), {"h": 1, "t1": 1, "t2": 1}),
    ("star-2;1,1", star_quiver(2), {"h": 2, "t1": 1, "t2": 1}),
    ("star-2;1,1,1", star_quiver(3), {"h": 2, "t1": 1, "t2": 1, "t3": 1}),
    ("star-2;2,1", star_quiver(2), {"h": 2, "t1": 2, "t2": 1}),
    ("parallel-2x2", _q("h", "t", [("t", "h"), ("t", "h")]), {"h": 2, "t": 2}),
    ("parallel-1x2-triple", _q("h", "t", [("t", "h")] * 3), {"h": 1, "t": 2}),
    ("shared-tail", _q(["h1", "h2"], "t", [("t", "h1"), ("t", "h2")]), {"h1": 2, "h2": 1, "t": 2}),
    ("zigzag", _q(["h1", "h2"], ["t1", "t2"], [("t1", "h1"), ("t2", "h1"), ("t2", "h2")]),
     {"h1": 2, "h2": 1, "t1": 1, "t2": 2}),
    ("square", _q(["h1", "h2"], ["t1", "t2"], [("t1", "h1"), ("t1", "h2"), ("t2", "h1"), ("t2", "h2")]),
     {"h1": 2, "h2": 1, "t1": 1, "t2": 1}),
]


def entries(q, d):
    return sum(d[h] * d[t] for t, h in q.arrows)


def all_compositions(q, d):
    for combo in itertools.product(*(list(compositions_of(d[v])) for v in q.vertices)):
        yield dict(zip(q.vertices, combo))


def labels_of_degree(q, d, comps, degree):
    """Every block-compatible label whose heads and tails both carry ``degree`` boxes."""
    opts = {}
    for v in q.vertices:
        opts[v] = [F for s in range(degree + 1) for F in partitions(s, max_length=d[v])
                   if block_compatible(F, comps[v])]
    for combo in itertools.product(*(opts[v] for v in q.vertices)):
        lab = dict(zip(q.vertices, combo))
        if sum(lab[h].size for h in q.heads) == degree and sum(lab[t].size for t in q.tails) == degree:
            yield lab


@pytest.fixture
def report(capsys):
    """Print one acceptance line straight to the terminal, bypassing capture."""

    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")

    return emit
