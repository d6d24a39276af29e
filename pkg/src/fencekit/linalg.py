"""Exact linear algebra: fraction-free rank over Q and Gaussian elimination over GF(p).

Everything here works on plain Python lists of ints or Fractions.  Nothing
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Hashable, Iterable, List, Sequence

from .errors import FencekitError


def _integral_row(row: Sequence) -> List[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    fr = [Fraction(x) for x in row]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def rank_q(rows: Iterable[Sequence]) -> int:
    """Rank over Q of a dense matrix given by rows of ints or Fractions."""
    return sparse_rank({j: x for j, x in enumerate(_integral_row(r)) if x} for r in rows)


def sparse_rank(rows: Iterable[Dict[Hashable, int]]) -> int:
    """Rank over Q of a sparse integer matrix (rows as ``{column: value}``).

    Fraction-free elimination: each reduction step is the integer
    combination ``a*row - b*pivot`` followed by division by the row content,
    so entries stay integral and small.
    """
    pivots: Dict[Hashable, Dict[Hashable, int]] = {}
    order: Dict[Hashable, int] = {}

    def key(c):
        if c not in order:
            order[c] = len(order)
        return order[c]

    for raw in rows:
        row = {c: int(v) for c, v in raw.items() if v}
        for c in row:
            key(c)
        while row:
            lead = min(row, key=key)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = _primitive(new)
    return len(pivots)


def _primitive(row: Dict[Hashable, int]) -> Dict[Hashable, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def subspace_dim(vectors: Sequence[Sequence], p: int | None = None) -> int:
    """Dimension of the span, over Q when ``p`` is None, else over GF(p)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    if p is None:
        return rank_q(vectors)
    return rank_mod_p(vectors, p)


def contained_in(sub: Sequence[Sequence], ambient: Sequence[Sequence], p: int | None = None) -> bool:
    """True when every vector of ``sub`` lies in the span of ``ambient``."""
    if not sub:
        return True
    return subspace_dim(list(ambient) + list(sub), p) == subspace_dim(ambient, p)


# -- GF(p) -------------------------------------------------------------------

def check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise FencekitError(f"{p} is not prime")
    return p


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> List[tuple]:
    """Nonzero rows of the reduced row echelon form over GF(p)."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out: List[List[int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    out = [tuple(row) for row in m[:r]]
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod_p(rows, p))


def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> List[tuple]:
    """Basis of ``{x : A x = 0}`` over GF(p), A given by its rows."""
    red = rref_mod_p(rows, p) if rows else []
    pivcols = []
    for row in red:
        pivcols.append(next(j for j, x in enumerate(row) if x))
    free = [j for j in range(ncols) if j not in pivcols]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivcols):
            v[pc] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


def matmul_mod_p(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) % p for j in range(ncols)] for i in range(len(A))]


def transpose(A: Sequence[Sequence]) -> List[List]:
    return [list(col) for col in zip(*A)]
