"""Brute-force invariants: the joint kernel of parabolic Lie-algebra derivations.

Coordinates on ``Rep(Q, d)`` are the matrix entries ``x^a_{ij}`` of every
arrow.  At a head the Lie algebra acts on row indices and at a tail on
column indices, both covariantly:

    head E_pq:  sum_{a into h} sum_j  x^a_{pj} d/dx^a_{qj}
    tail E_pq:  sum_{a out of t} sum_i x^a_{ip} d/dx^a_{iq}

With this choice ``C[Mat_{n,k}]`` is ``sum_D rho_n^D ⊗ rho_k^D`` with both
factors polynomial, a vector killed by the upper triangular generators is a
highest weight vector, and the ``P'``-invariants of weight ``mu_F`` are
exactly the highest weight lines of label F.  (At a head this is the left
action through ``g -> (g^T)^{-1}``, i.e. it differs from the literal
``f(g^{-1} M)`` by the transpose-inverse automorphism; only kernel
dimensions are exported, and those are what the comparison needs.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Sequence

from .errors import FencekitError, ResourceBoundError, monomial_ceiling
from .linalg import sparse_rank
from .quiver import FenceQuiver, check_dims
from .young import Composition, Partition, block_values

DEFAULT_MAX_MONOMIALS = 2 * 10**5


class SparsePolynomial(dict):
    """``{exponent tuple: Fraction}`` with no zero coefficients stored."""

    def __init__(self, terms=(), nvars: int | None = None):
        super().__init__()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            c = Fraction(c)
            if c:
                mono = tuple(mono)
                self[mono] = self.get(mono, 0) + c
                if not self[mono]:
                    del self[mono]
        self.nvars = nvars if nvars is not None else (len(next(iter(self))) if self else 0)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "SparsePolynomial":
        return cls({tuple(int(i == index) for i in range(nvars)): 1}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "SparsePolynomial":
        return cls({(0,) * nvars: c}, nvars)

    def __add__(self, other):
        out = SparsePolynomial(self, self.nvars)
        for mono, c in other.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return out

    def __neg__(self):
        return SparsePolynomial({m: -c for m, c in self.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            return SparsePolynomial({m: c * other for m, c in self.items()}, self.nvars)
        out = SparsePolynomial((), self.nvars)
        for m1, c1 in self.items():
            for m2, c2 in other.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(mono, 0) + c1 * c2
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return dict.__eq__(self, other)

    __hash__ = None

    def degree(self) -> int:
        return max((sum(m) for m in self), default=0)


@dataclass(frozen=True)
class Layout:
    """Variable numbering: arrow by arrow, each matrix row-major."""

    quiver: FenceQuiver
    dims: Mapping

    @property
    def variables(self) -> List[tuple]:
        out = []
        for a, (t, h) in enumerate(self.quiver.arrows):
            out.extend((a, i, j) for i in range(self.dims[h]) for j in range(self.dims[t]))
        return out

    def index(self) -> Dict[tuple, int]:
        return {v: k for k, v in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)


def layout_of(q: FenceQuiver, d: Mapping) -> Layout:
    return Layout(q, check_dims(q, d))


@dataclass(frozen=True)
class Derivation:
    """``E_pq`` (kind "E") or ``H_p - H_q`` (kind "H") at a vertex; p, q are 1-based."""

    vertex: object
    kind: str
    p: int
    q: int
    side: str  # "head" or "tail"

    def __str__(self):
        name = f"E{self.p}{self.q}" if self.kind == "E" else f"H{self.p}-H{self.q}"
        return f"{self.side} {self.vertex}: {name}"


def pprime_generators(vertex, comp: Sequence[int], side: str = "head") -> List[Derivation]:
    """Generators of Lie(P') for the block upper triangular parabolic of ``comp``."""
    if side not in ("head", "tail"):
        raise FencekitError("side must be 'head' or 'tail'")
    comp = Composition(comp)
    spans = comp.spans()
    block_of = {i: b for b, span in enumerate(spans) for i in span}
    k = comp.total
    gens = []
    for span in spans:
        for p in span:
            for q in span:
                if p != q:
                    gens.append(Derivation(vertex, "E", p + 1, q + 1, side))
    for p in range(k):
        for q in range(k):
            if block_of[p] < block_of[q]:
                gens.append(Derivation(vertex, "E", p + 1, q + 1, side))
    for span in spans:
        for p, q in zip(span, span[1:]):
            gens.append(Derivation(vertex, "H", p + 1, q + 1, side))
    return gens


def _substitutions(der: Derivation, layout: Layout):
    """Pairs (x_target, x_source) with ``E_pq = sum x_target d/dx_source``.

    For ``H_p - H_q`` the same pairs give the +1 and -1 variables."""
    q, d = layout.quiver, layout.dims
    idx = layout.index()
    v = der.vertex
    if der.side == "head" and not q.is_head(v) or der.side == "tail" and q.is_head(v):
        raise FencekitError(f"derivation side {der.side!r} does not match vertex {v!r}")
    if der.p > d[v] or der.q > d[v] or der.p < 1 or der.q < 1:
        raise FencekitError(f"generator indices must be in 1..{d[v]}")
    p, r = der.p - 1, der.q - 1
    pairs = []
    for a in q.arrows_at(v):
        t, h = q.arrows[a]
        if der.side == "head":
            for j in range(d[t]):
                pairs.append((idx[(a, p, j)], idx[(a, r, j)]))
        else:
            for i in range(d[h]):
                pairs.append((idx[(a, i, p)], idx[(a, i, r)]))
    return pairs


def apply_derivation(der: Derivation, f: SparsePolynomial, layout: Layout) -> SparsePolynomial:
    """Exact image of ``f`` under the derivation."""
    pairs = _substitutions(der, layout)
    out = SparsePolynomial((), layout.nvars)
    for mono, c in f.items():
        for target, coeff in _apply_to_monomial(der.kind, pairs, mono):
            out = out + SparsePolynomial({target: c * coeff}, layout.nvars)
    return out


def _apply_to_monomial(kind: str, pairs, mono: tuple):
    if kind == "H":
        # H_p - H_q counts degree in index p minus degree in index q
        w = sum(mono[tgt] - mono[src] for tgt, src in pairs)
        if w:
            yield mono, w
        return
    for tgt, src in pairs:
        e = mono[src]
        if e:
            new = list(mono)
            new[src] -= 1
            new[tgt] += 1
            yield tuple(new), e


def max_monomials() -> int:
    return monomial_ceiling(DEFAULT_MAX_MONOMIALS)


def _weight_groups(layout: Layout, comps: Mapping, label: Mapping):
    """Constraint groups: (variable indices, required total degree)."""
    q, d = layout.quiver, layout.dims
    groups = []
    for v in q.vertices:
        comp = comps.get(v)
        if comp is None:
            continue
        comp = Composition(comp)
        if comp.total != d[v]:
            raise FencekitError(f"composition at {v!r} must sum to {d[v]}")
        F = Partition(label.get(v, ()))
        if len(F) > d[v]:
            return None
        values = block_values(F, comp)
        if values is None:
            return None
        values = [k * f for k, f in zip(comp, values)]
        head = q.is_head(v)
        for span, w in zip(comp.spans(), values):
            members = []
            for k, (a, i, j) in enumerate(layout.variables):
                t, h = q.arrows[a]
                if head and h == v and i in span or not head and t == v and j in span:
                    members.append(k)
            groups.append((members, w))
    return groups


def weight_space(layout: Layout, comps: Mapping, label: Mapping, degree: int, limit: int | None = None) -> List[tuple]:
    """Monomials of the given degree whose block degree sums match the label."""
    limit = max_monomials() if limit is None else limit
    groups = _weight_groups(layout, comps, label)
    if groups is None:
        return []
    n = layout.nvars
    groups = groups + [(list(range(n)), degree)]
    member_of = [[g for g, (mem, _) in enumerate(groups) if k in mem] for k in range(n)]
    last_of = [max(mem) if mem else -1 for mem, _ in groups]
    remaining = [w for _, w in groups]
    for mem, w in groups:
        if not mem and w:
            return []
    out: List[tuple] = []
    expo = [0] * n

    def rec(k):
        if k == n:
            if all(r == 0 for r in remaining):
                out.append(tuple(expo))
                if len(out) > limit:
                    raise ResourceBoundError(f"weight space exceeds {limit} monomials")
            return
        gs = member_of[k]
        cap = min(remaining[g] for g in gs)
        forced = [remaining[g] for g in gs if last_of[g] == k]
        if forced:
            lo = hi = forced[0]
            if any(x != lo for x in forced) or lo > cap:
                return
        else:
            lo, hi = 0, cap
        for x in range(hi, lo - 1, -1):
            expo[k] = x
            for g in gs:
                remaining[g] -= x
            rec(k + 1)
            for g in gs:
                remaining[g] += x
        expo[k] = 0

    rec(0)
    return out


def component_dim(q: FenceQuiver, d: Mapping, comps: Mapping, label: Mapping, degree: int,
                  limit: int | None = None) -> int:
    """Dimension of the weight-``label`` piece of the ``P'``-invariants in degree ``degree``.

    ``comps[v]`` is the composition at ``v``; ``None`` (or a missing key)
    means no group acts at ``v`` and its label is ignored.
    """
    layout = layout_of(q, d)
    degree = int(degree)
    if degree < 0:
        raise FencekitError("degree must be nonnegative")
    constrained = [v for v in q.vertices if comps.get(v) is not None]
    heads_boxes = [Partition(label.get(v, ())).size for v in constrained if q.is_head(v)]
    tails_boxes = [Partition(label.get(v, ())).size for v in constrained if not q.is_head(v)]
    # a constrained side whose every vertex is labelled fixes the degree
    if len(heads_boxes) == len(q.heads) and sum(heads_boxes) != degree:
        return 0
    if len(tails_boxes) == len(q.tails) and sum(tails_boxes) != degree:
        return 0
    basis = weight_space(layout, comps, label, degree, limit)
    if not basis:
        return 0
    gens = []
    for v in constrained:
        gens.extend(pprime_generators(v, comps[v], "head" if q.is_head(v) else "tail"))
    if not gens:
        return len(basis)
    rows: Dict[tuple, Dict[int, int]] = {}
    for g in gens:
        pairs = _substitutions(g, layout)
        for col, mono in enumerate(basis):
            for target, coeff in _apply_to_monomial(g.kind, pairs, mono):
                row = rows.setdefault((g, target), {})
                row[col] = row.get(col, 0) + coeff
    return len(basis) - sparse_rank(rows.values())


def full_space_dim(nvars: int, degree: int) -> int:
    """Number of monomials of a given degree in ``nvars`` variables."""
    return comb(nvars + degree - 1, degree)
