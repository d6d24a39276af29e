"""Littlewood–Richardson coefficients and the products built from them.

``c^F_{DE}`` is counted directly as the number of LR fillings of the skew
shape ``F/D`` with content ``E``: semistandard, with a reverse reading word
(right to left, top to bottom) that is a lattice word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Mapping, Sequence

from .errors import FencekitError
from .young import EMPTY, Partition, partitions_between


@dataclass(frozen=True)
class TensorDecomposition:
    """Multiplicities of ``rho_n^F`` in a tensor product of GL_n irreducibles."""

    row_bound: int
    multiplicities: Mapping[Partition, int] = field(default_factory=dict)

    def __getitem__(self, F):
        return self.multiplicities.get(Partition(F), 0)

    def items(self):
        return sorted(self.multiplicities.items(), key=lambda kv: (-kv[0].size, tuple(-x for x in kv[0])))

    def total_dimension(self) -> int:
        return sum(m * gl_dim(F, self.row_bound) for F, m in self.multiplicities.items())


def lr_coefficient(F: Sequence[int], D: Sequence[int], E: Sequence[int]) -> int:
    """Multiplicity of ``rho^F`` in ``rho^D ⊗ rho^E``."""
    F, D, E = Partition(F), Partition(D), Partition(E)
    if F.size != D.size + E.size:
        return 0
    if not F.contains(D) or not F.contains(E):
        return 0
    # fewer boxes to fill is cheaper; c^F_{DE} = c^F_{ED}
    if (D.size, D) < (E.size, E):
        D, E = E, D
    return _lr_count(F, D, E)


@lru_cache(maxsize=None)
def _lr_count(F: Partition, D: Partition, E: Partition) -> int:
    if not E:
        return 1 if F == D else 0
    if len(F) > len(D) + len(E) or F[0] > (D[0] if D else 0) + E[0]:
        return 0
    Dp = D.padded(len(F))
    cells = [(i, j) for i in range(len(F)) for j in range(F[i] - 1, Dp[i] - 1, -1)]
    grid = {}
    counts = [0] * (len(E) + 1)
    target = (0,) + tuple(E)

    def rec(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = len(E)
        right = grid.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if i > 0 and j >= Dp[i - 1]:
            lo = grid[(i - 1, j)] + 1
        # an LR filling never puts a value larger than the row index (1-based)
        hi = min(hi, i + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= target[v]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            grid[(i, j)] = v
            total += rec(k + 1)
            counts[v] -= 1
        grid.pop((i, j), None)
        return total

    return rec(0)


def _products(G: Partition, D: Partition, n: int, ceiling: Partition | None = None) -> Dict[Partition, int]:
    """Nonzero ``c^H_{GD}`` over ``H`` with at most ``n`` rows (and ``H ⊆ ceiling``)."""
    size = G.size + D.size
    rows = min(n, len(G) + len(D))
    width = (G[0] if G else 0) + (D[0] if D else 0)
    upper = [width] * rows
    if ceiling is not None:
        cap = tuple(ceiling[:rows]) + (0,) * max(0, rows - len(ceiling))
        upper = [min(a, b) for a, b in zip(upper, cap)]
    out = {}
    for H in partitions_between(G, upper, size):
        c = lr_coefficient(H, G, D)
        if c:
            out[H] = c
    return out


def multi_lr(F: Sequence[int], D: Sequence[Sequence[int]], row_bound: int) -> int:
    """``dim Hom_{GL_n}(rho^F, rho^{D_1} ⊗ ... ⊗ rho^{D_m})`` with ``n = row_bound``.

    Sums ``c^{F_2}_{D_1 D_2} c^{F_3}_{F_2 D_3} ... c^{F}_{F_{m-1} D_m}`` over
    chains whose diagrams all have at most ``n`` rows.  A diagram with more
    than ``n`` rows labels no GL_n module, so the result is then 0.
    """
    F = Partition(F)
    D = [Partition(x) for x in D]
    n = int(row_bound)
    if n < 1:
        raise FencekitError("row bound must be positive")
    if len(F) > n or any(len(x) > n for x in D):
        return 0
    if F.size != sum(x.size for x in D):
        return 0
    if not D:
        return 1 if not F else 0
    return _multi_lr(F, tuple(D), n)


@lru_cache(maxsize=None)
def _multi_lr(F: Partition, D: tuple, n: int) -> int:
    current = {D[0]: 1} if F.contains(D[0]) else {}
    for Di in D[1:]:
        nxt: Dict[Partition, int] = {}
        for G, mult in current.items():
            for H, c in _products(G, Di, n, ceiling=F).items():
                if F.contains(H):
                    nxt[H] = nxt.get(H, 0) + mult * c
        current = nxt
    return current.get(F, 0)


def tensor_expand(D: Sequence[Sequence[int]], row_bound: int) -> TensorDecomposition:
    """Decompose ``rho_n^{D_1} ⊗ ... ⊗ rho_n^{D_m}`` into GL_n irreducibles."""
    D = [Partition(x) for x in D]
    n = int(row_bound)
    if n < 1:
        raise FencekitError("row bound must be positive")
    if any(len(x) > n for x in D):
        raise FencekitError(f"every factor needs at most {n} rows")
    current: Dict[Partition, int] = {EMPTY: 1}
    for Di in D:
        nxt: Dict[Partition, int] = {}
        for G, mult in current.items():
            for H, c in _products(G, Di, n).items():
                nxt[H] = nxt.get(H, 0) + mult * c
        current = nxt
    return TensorDecomposition(n, current)


def gl_dim(F: Sequence[int], n: int) -> int:
    """Weyl dimension of ``rho_n^F``; 0 when F has more than n rows."""
    F = Partition(F)
    if len(F) > n:
        return 0
    f = F.padded(n)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= f[i] - f[j] + j - i
            den *= j - i
    return num // den


def branch_multiplicity(F: Sequence[int], arm_sizes: Sequence[int], D: Sequence[Sequence[int]]) -> int:
    """Multiplicity of ``⊗ rho_{c_i}^{D_i}`` in ``rho_c^F`` under ``prod GL_{c_i} ⊂ GL_c``.

    By reciprocity this is the GL_c tensor multiplicity ``multi_lr(F, D, c)``.
    """
    arm_sizes = tuple(int(c) for c in arm_sizes)
    D = [Partition(x) for x in D]
    if len(D) != len(arm_sizes):
        raise FencekitError("need one diagram per arm")
    if any(c < 1 for c in arm_sizes):
        raise FencekitError("arm sizes must be positive")
    if any(len(x) > c for x, c in zip(D, arm_sizes)):
        return 0
    return multi_lr(F, D, sum(arm_sizes))
