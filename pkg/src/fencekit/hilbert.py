"""Graded dimensions of parabolic invariant algebras on ``Rep(Q, d)``.

The coordinate ring decomposes arrow by arrow as
``C[Mat_{d_h x d_t}] = sum_D rho_{d_h}^D ⊗ rho_{d_t}^D``.  A component of the
``P'_H x P'_T`` invariants is labelled by one block-compatible diagram per
vertex, and its dimension is a sum over per-arrow diagrams ``D(a)`` of
products of multi-LR numbers, one per vertex.

Three routes compute the same numbers:

* ``component_dim``: the per-vertex product of multi-LR contractions;
* ``section_dim_heads`` / ``section_dim_tails``: branch the big
  ``GL_{n_v}`` representation on one side down to the arms, then contract
  on the other side;
* :mod:`fencekit.invariant_oracle`: linear algebra on polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Mapping, Optional, Sequence

from .errors import FencekitError, IncompatibleError, ResourceBoundError
from .lr import branch_multiplicity, gl_dim, multi_lr
from .quiver import FenceQuiver, ambient_dim, check_dims
from .young import (
    Composition,
    Partition,
    block_compatible,
    block_values,
    compositions_of,
    diagram_from_exponents,
    partitions,
    partitions_between,
)
from . import invariant_oracle

DEFAULT_MAX_ARROW_TUPLES = 10**6


@dataclass(frozen=True)
class ComponentLabel:
    """One Young diagram per vertex."""

    diagrams: Mapping

    def __post_init__(self):
        object.__setattr__(self, "diagrams", {v: Partition(F) for v, F in self.diagrams.items()})

    def __getitem__(self, v) -> Partition:
        return self.diagrams[v]

    def __str__(self):
        return " ".join(f"{v}={F}" for v, F in self.diagrams.items())


@dataclass(frozen=True)
class GradedDimensionReport:
    level: int
    label: ComponentLabel
    dimension: int
    route: str  # "heads-first", "tails-first" or "oracle"


def _as_label(label) -> ComponentLabel:
    return label if isinstance(label, ComponentLabel) else ComponentLabel(label)


def _check_label(q: FenceQuiver, d: Mapping, comps: Mapping, label: ComponentLabel):
    if set(label.diagrams) != set(q.vertices):
        raise FencekitError("label must give a diagram at every vertex")
    for v in q.vertices:
        comp = Composition(comps[v])
        if comp.total != d[v]:
            raise FencekitError(f"composition at {v!r} must sum to d={d[v]}")
        F = label[v]
        if len(F) > d[v]:
            raise IncompatibleError(f"label {F} at {v!r} has more than {d[v]} rows")
        if block_values(F, comp) is None:
            raise IncompatibleError(f"label {F} at {v!r} is not constant on the blocks of {tuple(comp)}")


def _size_flows(q: FenceQuiver, label: ComponentLabel) -> Iterator[tuple]:
    """Box counts per arrow, summing to |F(v)| at every vertex."""
    arrows = q.arrows
    need = {v: label[v].size for v in q.vertices}
    last_at = {}
    for i, (t, h) in enumerate(arrows):
        last_at[t] = i
        last_at[h] = i
    sizes = [0] * len(arrows)

    def rec(i):
        if i == len(arrows):
            yield tuple(sizes)
            return
        t, h = arrows[i]
        cap = min(need[t], need[h])
        forced = [need[v] for v in (t, h) if last_at[v] == i]
        if forced:
            if any(x != forced[0] for x in forced) or forced[0] > cap:
                return
            options = [forced[0]]
        else:
            options = range(cap, -1, -1)
        for s in options:
            sizes[i] = s
            need[t] -= s
            need[h] -= s
            yield from rec(i + 1)
            need[t] += s
            need[h] += s

    yield from rec(0)


def _meet(F: Partition, E: Partition) -> Partition:
    return Partition(min(a, b) for a, b in zip(F, E))


def _arrow_diagram_tuples(q: FenceQuiver, d: Mapping, label: ComponentLabel,
                          limit: int | None = None) -> Iterator[tuple]:
    """Every tuple of per-arrow diagrams compatible with the label's box counts."""
    limit = DEFAULT_MAX_ARROW_TUPLES if limit is None else limit
    seen = 0
    for sizes in _size_flows(q, label):
        choices = []
        for (t, h), s in zip(q.arrows, sizes):
            rows = min(d[h], d[t])
            cap = _meet(label[h], label[t])
            choices.append([D for D in partitions(s, max_length=rows) if cap.contains(D)])
        for combo in itertools.product(*choices):
            seen += 1
            if seen > limit:
                raise ResourceBoundError(f"more than {limit} arrow-diagram tuples")
            yield combo


def _boxes_match(q: FenceQuiver, label: ComponentLabel) -> bool:
    return sum(label[h].size for h in q.heads) == sum(label[t].size for t in q.tails)


def component_dim(q: FenceQuiver, d: Mapping, comps: Mapping, label, limit: int | None = None) -> int:
    """Dimension of the ``label`` component of ``C[Rep(Q,d)]^{P'_H x P'_T}``."""
    d = check_dims(q, d)
    label = _as_label(label)
    _check_label(q, d, comps, label)
    if not _boxes_match(q, label):
        return 0
    at = {v: q.arrows_at(v) for v in q.vertices}
    total = 0
    for D in _arrow_diagram_tuples(q, d, label, limit):
        term = 1
        for v in q.vertices:
            term *= multi_lr(label[v], [D[i] for i in at[v]], d[v])
            if not term:
                break
        total += term
    return total


# -- section-space routes ----------------------------------------------------

def forced_label(q: FenceQuiver, comps: Mapping, exponents: Mapping, N: int) -> ComponentLabel:
    """``F(v) = diagram_from_exponents(N * exponents[v], comps[v])`` at every vertex."""
    out = {}
    for v in q.vertices:
        comp = Composition(comps[v])
        e = tuple(int(x) for x in exponents[v])
        out[v] = diagram_from_exponents(tuple(N * x for x in e), comp)
    return ComponentLabel(out)


def _prepare(q, d, comps, exponents, N):
    d = check_dims(q, d)
    if int(N) < 0:
        raise FencekitError("level must be nonnegative")
    label = forced_label(q, comps, exponents, 1)
    if not _boxes_match(q, label):
        raise IncompatibleError("head and tail box counts differ: the linearization is not compatible")
    label = forced_label(q, comps, exponents, int(N))
    _check_label(q, d, comps, label)
    return d, label


def _branching_options(q, d, label, v, limit) -> List[tuple]:
    """Nonzero branchings of ``rho_{n_v}^{F(v)}`` to the arms at ``v``.

    Returns ``(arrow indices, diagrams, multiplicity)`` triples.
    """
    idx = q.arrows_at(v)
    arms = [d[q.other_end(i, v)] for i in idx]
    F = label[v]
    if len(F) > ambient_dim(q, d, v):
        return []
    out = []
    for sizes in _splits(F.size, len(idx)):
        choices = [list(partitions_between((), F, s)) for s in sizes]
        choices = [[D for D in ch if len(D) <= c] for ch, c in zip(choices, arms)]
        for combo in itertools.product(*choices):
            m = branch_multiplicity(F, arms, combo)
            if m:
                out.append((idx, combo, m))
                if len(out) > limit:
                    raise ResourceBoundError(f"more than {limit} branching terms at {v!r}")
    return out


def _splits(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def _section_dim(q, d, comps, exponents, N, branch_side, limit):
    d, label = _prepare(q, d, comps, exponents, N)
    if int(N) == 0:
        return 1
    limit = DEFAULT_MAX_ARROW_TUPLES if limit is None else limit
    branch_vs = q.heads if branch_side == "heads" else q.tails
    contract_vs = q.tails if branch_side == "heads" else q.heads
    per_vertex = [_branching_options(q, d, label, v, limit) for v in branch_vs]
    at = {v: q.arrows_at(v) for v in contract_vs}
    total = 0
    for pick in itertools.product(*per_vertex):
        D = {}
        mult = 1
        for idx, combo, m in pick:
            D.update(zip(idx, combo))
            mult *= m
        for v in contract_vs:
            mult *= multi_lr(label[v], [D[i] for i in at[v]], d[v])
            if not mult:
                break
        total += mult
    return total


def section_dim_heads(q: FenceQuiver, d: Mapping, comps: Mapping, exponents: Mapping, N: int,
                      limit: int | None = None) -> int:
    """Level-N dimension computed heads first.

    Each tail's ``rho_{n_t}^{E(t)}`` is branched to ``prod_a GL_{d_h(a)}``
    and the resulting per-arrow diagrams are contracted at the heads, where
    ``F(h)`` must appear as a ``P'_h``-highest weight.
    """
    return _section_dim(q, d, comps, exponents, N, "tails", limit)


def section_dim_tails(q: FenceQuiver, d: Mapping, comps: Mapping, exponents: Mapping, N: int,
                      limit: int | None = None) -> int:
    """Level-N dimension computed tails first: the mirror of :func:`section_dim_heads`."""
    return _section_dim(q, d, comps, exponents, N, "heads", limit)


# -- duality and transfer ----------------------------------------------------

def cauchy_sides(n: int, k: int, degree: int) -> tuple:
    """``(sum_{|F|=degree} dim rho_n^F dim rho_k^F, C(nk+degree-1, degree))``."""
    if n < 1 or k < 1 or degree < 0:
        raise FencekitError("need n, k >= 1 and degree >= 0")
    lhs = sum(gl_dim(F, n) * gl_dim(F, k) for F in partitions(degree, max_length=min(n, k)))
    return lhs, comb(n * k + degree - 1, degree)


def cauchy_check(n: int, k: int, degree: int) -> bool:
    lhs, rhs = cauchy_sides(n, k, degree)
    return lhs == rhs


def _invariant_line(F: Partition, comp: Composition) -> int:
    if len(F) > comp.total:
        return 0
    return int(block_compatible(F, comp))


def transfer_check(n: int, m: int, comp_n, comp_m, F) -> tuple:
    """``(lhs, rhs, lhs == rhs)`` for the ``F`` component of ``C[Mat_{n,m}]^{P'_n x P'_m}``.

    lhs reads the component off the GL_n x GL_m decomposition of the matrix
    space.  rhs goes through ``(C[GL_m]^{1 x P'_m} ⊗ C[Mat_{n,m}]^{P'_n x 1})^{GL_m}``:
    a sum over GL_m labels lambda of the invariant line in ``rho_m^lambda``
    times the GL_m-invariant pairing with ``rho_m^F``.
    """
    comp_n, comp_m = Composition(comp_n), Composition(comp_m)
    if comp_n.total != n or comp_m.total != m:
        raise FencekitError("compositions must sum to n and m")
    F = Partition(F)
    if len(F) > min(n, m):
        lhs = 0
    else:
        lhs = _invariant_line(F, comp_n) * _invariant_line(F, comp_m)
    rhs = 0
    for lam in partitions(F.size, max_length=m):
        pairing = multi_lr(F, [lam], m)
        if pairing:
            rhs += _invariant_line(lam, comp_m) * _invariant_line(F, comp_n) * pairing
    return lhs, rhs, lhs == rhs


def all_transfer_cases(n_max: int, max_boxes: int) -> Iterator[tuple]:
    """``(n, m, comp_n, comp_m, F)`` for every case up to the given sizes."""
    for n in range(1, n_max + 1):
        for m in range(1, n_max + 1):
            for cn in compositions_of(n):
                for cm in compositions_of(m):
                    for size in range(max_boxes + 1):
                        for F in partitions(size):
                            yield n, m, cn, cm, F


# -- verification table ------------------------------------------------------

def oracle_component(q, d, comps, label, limit: int | None = None) -> Optional[int]:
    """Invariant-oracle dimension, or None when it is over its bound."""
    label = _as_label(label)
    degree = sum(label[h].size for h in q.heads)
    try:
        return invariant_oracle.component_dim(q, d, comps, label.diagrams, degree, limit)
    except ResourceBoundError:
        return None


def gm_table(q: FenceQuiver, d: Mapping, comps: Mapping, exponents: Mapping, n_max: int,
             oracle: bool = True, oracle_limit: int | None = None) -> List[GradedDimensionReport]:
    """Reports for every level 0..n_max along each route."""
    d = check_dims(q, d)
    _prepare(q, d, comps, exponents, 0)
    out = []
    for N in range(int(n_max) + 1):
        label = forced_label(q, comps, exponents, N)
        out.append(GradedDimensionReport(N, label, section_dim_heads(q, d, comps, exponents, N), "heads-first"))
        out.append(GradedDimensionReport(N, label, section_dim_tails(q, d, comps, exponents, N), "tails-first"))
        if oracle:
            dim = 1 if N == 0 else oracle_component(q, d, comps, label, oracle_limit)
            if dim is not None:
                out.append(GradedDimensionReport(N, label, dim, "oracle"))
    return out


def gm_rows(reports: Sequence[GradedDimensionReport]) -> List[dict]:
    """Group reports per level: heads, tails, oracle (or None) and agreement."""
    rows: Dict[int, dict] = {}
    for rep in reports:
        row = rows.setdefault(rep.level, {"N": rep.level, "label": str(rep.label), "heads": None,
                                          "tails": None, "oracle": None})
        key = {"heads-first": "heads", "tails-first": "tails", "oracle": "oracle"}[rep.route]
        row[key] = rep.dimension
    for row in rows.values():
        vals = [row[k] for k in ("heads", "tails", "oracle") if row[k] is not None]
        row["agree"] = len(set(vals)) == 1
    return [rows[k] for k in sorted(rows)]
