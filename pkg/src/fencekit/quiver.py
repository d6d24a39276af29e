"""Fence quivers, their linearizations, and two ways of testing semistability.

A fence quiver has its vertices split into heads and tails with every arrow
running from a tail to a head.  ``Rep(Q, d)`` is the space of tuples of
matrices ``M_a`` of shape ``d_{h(a)} x d_{t(a)}``; ``GL_d`` acts by
``M_a -> g_{h(a)} M_a g_{t(a)}^{-1}``.

Semistability is tested two ways: by brute force over every
subrepresentation of a representation over a small prime field, and by the
Grassmannian inequalities that describe the same condition once the
representation is recorded as a point of a product of Grassmannians.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Mapping

from .errors import FencekitError, IncompatibleError, ResourceBoundError
from .linalg import check_prime, contained_in, matmul_mod_p, nullspace_mod_p, rank_mod_p, subspace_dim
from .young import Composition, diagram_from_exponents

FORMAT = "fencekit/1"
DEFAULT_SUBSPACE_TUPLES = 10**6


@dataclass(frozen=True)
class FenceQuiver:
    heads: tuple
    tails: tuple
    arrows: tuple  # (tail, head) pairs; the index is the arrow's name

    def __post_init__(self):
        object.__setattr__(self, "heads", tuple(self.heads))
        object.__setattr__(self, "tails", tuple(self.tails))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        if len(set(self.heads)) != len(self.heads) or len(set(self.tails)) != len(self.tails):
            raise FencekitError("duplicate vertex id")
        both = set(self.heads) & set(self.tails)
        if both:
            raise FencekitError(f"vertices {sorted(both)} are both heads and tails")
        H, T = set(self.heads), set(self.tails)
        for i, a in enumerate(self.arrows):
            if len(a) != 2:
                raise FencekitError(f"arrow {i} must be a (tail, head) pair")
            t, h = a
            if t in H and h in H:
                raise FencekitError(f"arrow {i} joins two heads {t}->{h}")
            if t in T and h in T:
                raise FencekitError(f"arrow {i} joins two tails {t}->{h}")
            if t not in T or h not in H:
                raise FencekitError(f"arrow {i} must run from a tail to a head, got {t}->{h}")
        touched = {v for a in self.arrows for v in a}
        lonely = [v for v in self.heads + self.tails if v not in touched]
        if lonely:
            raise FencekitError(f"vertices {lonely} have no arrows")

    @property
    def vertices(self) -> tuple:
        return self.heads + self.tails

    def is_head(self, v) -> bool:
        self._known(v)
        return v in self.heads

    def _known(self, v):
        if v not in self.heads and v not in self.tails:
            raise FencekitError(f"unknown vertex {v!r}")

    def arrows_at(self, v) -> List[int]:
        """Indices of the arrows incident to ``v``, in arrow order."""
        self._known(v)
        pos = 1 if v in self.heads else 0
        return [i for i, a in enumerate(self.arrows) if a[pos] == v]

    def other_end(self, i: int, v):
        t, h = self.arrows[i]
        return t if v == h else h


def star_quiver(m: int, head="h", tail_prefix="t") -> FenceQuiver:
    """One head fed by ``m`` tails."""
    tails = tuple(f"{tail_prefix}{i + 1}" for i in range(m))
    return FenceQuiver((head,), tails, tuple((t, head) for t in tails))


def check_dims(q: FenceQuiver, d: Mapping) -> Dict:
    if set(d) != set(q.vertices):
        raise FencekitError("dimension vector must cover exactly the quiver's vertices")
    if any(int(x) < 1 for x in d.values()):
        raise FencekitError("dimension vector entries must be positive")
    return {v: int(d[v]) for v in q.vertices}


def ambient_dim(q: FenceQuiver, d: Mapping, v) -> int:
    """``n_v``: the sum of ``d`` at the far end of every arrow at ``v``."""
    return sum(d[q.other_end(i, v)] for i in q.arrows_at(v))


@dataclass(frozen=True)
class Linearization:
    """Determinant exponents ``r`` on heads and ``e`` on tails."""

    r: Mapping = field(default_factory=dict)
    e: Mapping = field(default_factory=dict)

    def weight(self, v) -> int:
        if v in self.r:
            return self.r[v]
        return -self.e.get(v, 0)

    def check(self, q: FenceQuiver):
        if set(self.r) != set(q.heads) or set(self.e) != set(q.tails):
            raise FencekitError("linearization must give r on every head and e on every tail")
        if any(x < 0 for x in list(self.r.values()) + list(self.e.values())):
            raise FencekitError("linearization exponents must be nonnegative")


def check_compatibility(q: FenceQuiver, d: Mapping, lin: Linearization) -> bool:
    lin.check(q)
    return sum(lin.r[h] * d[h] for h in q.heads) == sum(lin.e[t] * d[t] for t in q.tails)


@dataclass(frozen=True)
class ParabolicData:
    """A composition of ``d_v`` and one character exponent per block, per vertex."""

    compositions: Mapping
    exponents: Mapping

    def __post_init__(self):
        comps = {v: Composition(c) for v, c in self.compositions.items()}
        exps = {v: tuple(int(x) for x in e) for v, e in self.exponents.items()}
        if set(comps) != set(exps):
            raise FencekitError("compositions and exponents must cover the same vertices")
        for v in comps:
            if len(exps[v]) != len(comps[v]):
                raise FencekitError(f"vertex {v!r}: {len(comps[v])} blocks but {len(exps[v])} exponents")
        object.__setattr__(self, "compositions", comps)
        object.__setattr__(self, "exponents", exps)

    def boxes(self, d: Mapping) -> int:
        """Total box count of the forced diagrams."""
        total = 0
        for v, comp in self.compositions.items():
            if comp.total != d[v]:
                raise FencekitError(f"composition {comp!r} does not sum to d[{v!r}]={d[v]}")
            total += diagram_from_exponents(self.exponents[v], comp).size
        return total


def check_parabolic_compatibility(q: FenceQuiver, d: Mapping, pH: ParabolicData, pT: ParabolicData) -> bool:
    """Both sides carry the same number of boxes in their forced diagrams."""
    if set(pH.compositions) != set(q.heads) or set(pT.compositions) != set(q.tails):
        raise FencekitError("parabolic data must cover heads and tails exactly")
    return pH.boxes(d) == pT.boxes(d)


def king_pairing(d_sub: Mapping, lin: Linearization) -> int:
    """``sum r_h d_sub(h) - sum e_t d_sub(t)``."""
    return sum(lin.r[h] * d_sub.get(h, 0) for h in lin.r) - sum(lin.e[t] * d_sub.get(t, 0) for t in lin.e)


# -- Grassmannian inequalities -----------------------------------------------

class Side(str, enum.Enum):
    HEADS = "heads"
    TAILS = "tails"


class GrassmannianVerdict(str, enum.Enum):
    VIOLATES = "violates"
    SATISFIES_STRICTLY = "satisfies_strictly"
    BOUNDARY = "boundary"


def _blocks(q: FenceQuiver, d: Mapping, v) -> Dict[int, range]:
    """Coordinate range of each arrow's factor inside ``C^{n_v}``."""
    out, start = {}, 0
    for i in q.arrows_at(v):
        width = d[q.other_end(i, v)]
        out[i] = range(start, start + width)
        start += width
    return out


def grassmannian_sides(q, d, lin, side, point, candidate, p=None):
    """Both sides ``(lhs, rhs)`` of the Grassmannian inequality for ``candidate``.

    Heads side: the point is a ``d_h``-plane ``V_h`` in ``C^{n_h}`` per head,
    ``lhs = sum r_h dim E_h`` and ``rhs = sum_t e_t dim(sum_a pi_a E_{h(a)})``
    where ``pi_a`` projects onto the arrow's factor ``C^{d_t}``.  Tails side
    swaps the roles of heads and tails (and of r and e).
    """
    side = Side(side)
    d = check_dims(q, d)
    lin.check(q)
    near, far = (q.heads, q.tails) if side is Side.HEADS else (q.tails, q.heads)
    w_near = lin.r if side is Side.HEADS else lin.e
    w_far = lin.e if side is Side.HEADS else lin.r
    if set(point) != set(near):
        raise FencekitError(f"point must give a subspace at every vertex on the {side.value} side")
    cand = {v: [list(x) for x in candidate.get(v, ())] for v in near}
    extra = set(candidate) - set(near)
    if extra:
        raise FencekitError(f"candidate names vertices off the {side.value} side: {sorted(extra)}")
    for v in near:
        n = ambient_dim(q, d, v)
        basis = [list(x) for x in point[v]]
        if any(len(x) != n for x in basis + cand[v]):
            raise FencekitError(f"vectors at {v!r} must have length n={n}")
        if subspace_dim(basis, p) != d[v] or len(basis) != d[v]:
            raise FencekitError(f"point at {v!r} must be a basis of a {d[v]}-dimensional subspace")
        if not contained_in(cand[v], basis, p):
            raise FencekitError(f"candidate at {v!r} is not inside the point")
    lhs = sum(w_near[v] * subspace_dim(cand[v], p) for v in near)
    blocks = {v: _blocks(q, d, v) for v in near}
    rhs = 0
    for u in far:
        images = []
        for i in q.arrows_at(u):
            v = q.other_end(i, u)
            rng = blocks[v][i]
            images.extend([x[k] for k in rng] for x in cand[v])
        rhs += w_far[u] * subspace_dim(images, p)
    return lhs, rhs


def grassmannian_stability(q, d, lin, side, point, candidate, p=None) -> GrassmannianVerdict:
    """Classify one candidate against the Grassmannian inequality; exact rank over Q or GF(p)."""
    lhs, rhs = grassmannian_sides(q, d, lin, side, point, candidate, p)
    if lhs > rhs:
        return GrassmannianVerdict.VIOLATES
    if lhs < rhs:
        return GrassmannianVerdict.SATISFIES_STRICTLY
    return GrassmannianVerdict.BOUNDARY


# -- finite-field representations --------------------------------------------

@dataclass(frozen=True)
class FiniteFieldRep:
    p: int
    matrices: tuple  # matrices[i] is d_{h(a)} x d_{t(a)} for arrow i

    def __post_init__(self):
        p = check_prime(self.p)
        if p > 7:
            raise FencekitError("finite-field representations are limited to p <= 7")
        mats = tuple(tuple(tuple(int(x) % p for x in row) for row in m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)

    def check(self, q: FenceQuiver, d: Mapping):
        if len(self.matrices) != len(q.arrows):
            raise FencekitError(f"need {len(q.arrows)} matrices, got {len(self.matrices)}")
        for i, (t, h) in enumerate(q.arrows):
            m = self.matrices[i]
            if len(m) != d[h] or any(len(row) != d[t] for row in m):
                raise FencekitError(f"arrow {i} needs a {d[h]}x{d[t]} matrix")


def subspaces_mod_p(n: int, p: int) -> Iterator[tuple]:
    """Every subspace of GF(p)^n as its RREF basis, by dimension then pivots."""
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), x in zip(free, values):
                    rows[i][j] = x
                yield tuple(tuple(r) for r in rows)


def count_subspaces(n: int, p: int) -> int:
    total = 0
    for k in range(n + 1):
        num, den = 1, 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def _span(basis, p) -> frozenset:
    n = len(basis[0]) if basis else 0
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        out.add(tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) % p for j in range(n)))
    return frozenset(out) if basis else frozenset()


class StabilityStatus(str, enum.Enum):
    UNSTABLE = "unstable"
    SEMISTABLE_NOT_STABLE = "semistable_not_stable"
    STABLE = "stable"


@dataclass(frozen=True)
class StabilityResult:
    status: StabilityStatus
    witness: Mapping | None = None  # vertex -> RREF basis of the subspace
    witness_dims: Mapping | None = None
    pairing: int | None = None


def subrepresentations(q: FenceQuiver, d: Mapping, rep: FiniteFieldRep, limit: int | None = None) -> Iterator[Dict]:
    """Every subrepresentation, heads first then tails, lexicographically."""
    d = check_dims(q, d)
    rep.check(q, d)
    p = rep.p
    limit = DEFAULT_SUBSPACE_TUPLES if limit is None else limit
    total = 1
    for v in q.vertices:
        total *= count_subspaces(d[v], p)
    if total > limit:
        raise ResourceBoundError(f"{total} subspace tuples exceed the bound {limit}")
    options = {}
    for v in q.vertices:
        options[v] = [(b, _span(b, p) if b else frozenset({(0,) * d[v]})) for b in subspaces_mod_p(d[v], p)]
    order = list(q.vertices)
    chosen: Dict = {}

    def closed(t, basis):
        for i in q.arrows_at(t):
            h = q.arrows[i][1]
            span_h = chosen[h][1]
            for v in basis:
                img = tuple(x[0] for x in matmul_mod_p(rep.matrices[i], [[c] for c in v], p))
                if img not in span_h:
                    return False
        return True

    def rec(k):
        if k == len(order):
            yield {v: chosen[v][0] for v in order}
            return
        v = order[k]
        for opt in options[v]:
            if v in q.tails and not closed(v, opt[0]):
                continue
            chosen[v] = opt
            yield from rec(k + 1)
        chosen.pop(v, None)

    yield from rec(0)


def exhaustive_stability(q: FenceQuiver, d: Mapping, lin: Linearization, rep: FiniteFieldRep,
                         convention: str = "king", limit: int | None = None) -> StabilityResult:
    """Brute-force semistability over every subrepresentation.

    ``convention="king"``: semistable iff every subrepresentation has
    pairing >= 0, stable iff every proper nonzero one has pairing > 0.
    ``convention="literal"``: the same with the sign reversed, so a
    positive pairing destabilizes.
    """
    if convention not in ("king", "literal"):
        raise FencekitError(f"unknown convention {convention!r}")
    d = check_dims(q, d)
    if not check_compatibility(q, d, lin):
        raise IncompatibleError("linearization is not compatible with the dimension vector")
    sign = 1 if convention == "king" else -1
    zero_witness = None
    for sub in subrepresentations(q, d, rep, limit):
        dims = {v: len(b) for v, b in sub.items()}
        if all(x == 0 for x in dims.values()) or dims == d:
            continue
        pair = king_pairing(dims, lin)
        if sign * pair < 0:
            return StabilityResult(StabilityStatus.UNSTABLE, sub, dims, pair)
        if pair == 0 and zero_witness is None:
            zero_witness = (sub, dims)
    if zero_witness is not None:
        return StabilityResult(StabilityStatus.SEMISTABLE_NOT_STABLE, zero_witness[0], zero_witness[1], 0)
    return StabilityResult(StabilityStatus.STABLE)


# -- from a representation to a Grassmannian point ---------------------------

def stacked_matrix(q: FenceQuiver, d: Mapping, rep: FiniteFieldRep, v) -> List[List[int]]:
    """Head: ``[M_a | M_b | ...]`` (d_h x n_h).  Tail: the M_a stacked vertically (n_t x d_t)."""
    idx = q.arrows_at(v)
    if q.is_head(v):
        return [sum((list(rep.matrices[i][r]) for i in idx), []) for r in range(d[v])]
    return [list(row) for i in idx for row in rep.matrices[i]]


def point_of_rep(q: FenceQuiver, d: Mapping, rep: FiniteFieldRep, side) -> Dict | None:
    """Row spaces of the stacked head matrices (heads side) or column spaces of
    the stacked tail matrices (tails side); None when some rank is deficient."""
    side = Side(side)
    d = check_dims(q, d)
    rep.check(q, d)
    out = {}
    for v in (q.heads if side is Side.HEADS else q.tails):
        M = stacked_matrix(q, d, rep, v)
        basis = M if side is Side.HEADS else [list(c) for c in zip(*M)]
        if rank_mod_p(basis, rep.p) != d[v]:
            return None
        out[v] = [list(x) for x in basis]
    return out


def lift_subrepresentation(q: FenceQuiver, d: Mapping, rep: FiniteFieldRep, sub: Mapping, side) -> Dict:
    """Grassmannian candidate attached to a subrepresentation.

    Heads side: ``E_h = S_h^perp . M_h``, the functionals vanishing on S_h
    pushed into the row space.  Tails side: ``E_t = M_t S_t``.
    """
    side = Side(side)
    p = rep.p
    out = {}
    for v in (q.heads if side is Side.HEADS else q.tails):
        M = stacked_matrix(q, d, rep, v)
        basis = [list(x) for x in sub[v]]
        if side is Side.HEADS:
            ann = nullspace_mod_p(basis, d[v], p) if basis else [tuple(int(i == j) for j in range(d[v])) for i in range(d[v])]
            out[v] = [matmul_mod_p([list(y)], M, p)[0] for y in ann]
        else:
            out[v] = [[x[0] for x in matmul_mod_p(M, [[c] for c in s], p)] for s in basis]
    return out


# -- JSON --------------------------------------------------------------------

@dataclass(frozen=True)
class QuiverSpec:
    quiver: FenceQuiver
    dims: Mapping
    compositions: Mapping
    exponents: Mapping  # per vertex, one exponent per block

    def linearization(self) -> Linearization:
        r, e = {}, {}
        for v, exp in self.exponents.items():
            if len(exp) != 1:
                raise FencekitError(f"vertex {v!r} has a parabolic composition; no plain linearization")
            (r if self.quiver.is_head(v) else e)[v] = exp[0]
        return Linearization(r, e)

    def parabolic(self):
        pick = lambda vs: ParabolicData({v: self.compositions[v] for v in vs}, {v: self.exponents[v] for v in vs})
        return pick(self.quiver.heads), pick(self.quiver.tails)


def _check_format(data):
    fmt = data.get("format", FORMAT)
    if fmt != FORMAT:
        raise FencekitError(f"unsupported format {fmt!r}; expected {FORMAT!r}")


def _read_json(source):
    if isinstance(source, Mapping):
        return source
    try:
        return json.loads(Path(source).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FencekitError(f"cannot read {source}: {exc}")


def load_quiver_spec(source) -> QuiverSpec:
    """Parse a quiver spec from a path or an already decoded dict.

    An integer exponent on a vertex with several blocks is the determinant
    character: it lands on the last block, so every block gets value c.
    """
    data = _read_json(source)
    _check_format(data)
    try:
        heads, tails, dims, comps = [], [], {}, {}
        for vx in data["vertices"]:
            vid, role = vx["id"], vx["role"]
            if role not in ("head", "tail"):
                raise FencekitError(f"vertex {vid!r}: role must be 'head' or 'tail'")
            (heads if role == "head" else tails).append(vid)
            dims[vid] = int(vx["dim"])
            comps[vid] = Composition(vx.get("composition") or [dims[vid]])
        arrows = [(a["tail"], a["head"]) for a in data["arrows"]]
        lin = data.get("linearization", {})
        raw = dict(lin.get("r", {}))
        raw.update(lin.get("e", {}))
    except (KeyError, TypeError) as exc:
        raise FencekitError(f"malformed quiver spec: missing {exc}")
    q = FenceQuiver(heads, tails, arrows)
    dims = check_dims(q, dims)
    for v, c in comps.items():
        if c.total != dims[v]:
            raise FencekitError(f"composition at {v!r} does not sum to its dimension")
    exps = {}
    for v in q.vertices:
        x = raw.get(v, 0)
        if isinstance(x, int):
            exps[v] = (0,) * (len(comps[v]) - 1) + (x,)
        else:
            exps[v] = tuple(int(y) for y in x)
            if len(exps[v]) != len(comps[v]):
                raise FencekitError(f"vertex {v!r}: need {len(comps[v])} exponents")
    return QuiverSpec(q, dims, comps, exps)


def dump_quiver_spec(spec: QuiverSpec) -> dict:
    q = spec.quiver
    verts = [{"id": v, "role": "head" if q.is_head(v) else "tail", "dim": spec.dims[v],
              "composition": list(spec.compositions[v])} for v in q.vertices]
    r = {h: list(spec.exponents[h]) for h in q.heads}
    e = {t: list(spec.exponents[t]) for t in q.tails}
    return {"format": FORMAT, "vertices": verts,
            "arrows": [{"tail": t, "head": h} for t, h in q.arrows],
            "linearization": {"r": r, "e": e}}


def load_rep(source) -> FiniteFieldRep:
    data = _read_json(source)
    _check_format(data)
    try:
        mats = data["matrices"]
        keys = sorted(mats, key=int)
        if [int(k) for k in keys] != list(range(len(keys))):
            raise FencekitError("matrices must be keyed by arrow indices 0..m-1")
        return FiniteFieldRep(int(data["p"]), tuple(mats[k] for k in keys))
    except (KeyError, TypeError, ValueError) as exc:
        raise FencekitError(f"malformed representation file: {exc}")
