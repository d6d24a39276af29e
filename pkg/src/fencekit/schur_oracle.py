"""Brute-force symmetric functions: the slow, trusted reference.

Schur polynomials here are tableau generating functions, and Schur-basis
expansion is leading-monomial elimination.  Nothing in this module calls
into :mod:`fencekit.lr`; the LR engine is validated against it.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, Sequence

from .errors import FencekitError, ResourceBoundError, monomial_ceiling
from .young import EMPTY, Partition, conjugate

DEFAULT_MAX_MONOMIALS = 10**6

IntPolynomial = Dict[tuple, int]


def max_monomials() -> int:
    return monomial_ceiling(DEFAULT_MAX_MONOMIALS)


@dataclass(frozen=True)
class Tableau:
    """Semistandard filling; ``rows[i][j]`` is the entry in row i, column j."""

    shape: Partition
    rows: tuple

    def content(self, m: int) -> tuple:
        c = [0] * m
        for row in self.rows:
            for x in row:
                c[x - 1] += 1
        return tuple(c)

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True


def predicted_ssyt_count(F: Sequence[int], m: int) -> int:
    """Hook-content formula for the number of SSYT of shape F in m letters."""
    F = Partition(F)
    Fc = conjugate(F)
    num, den = 1, 1
    for i, row in enumerate(F):
        for j in range(row):
            num *= m + j - i
            den *= (row - j - 1) + (Fc[j] - i - 1) + 1
    return num // den if num > 0 else 0


def _guard(count: int, limit: int | None):
    limit = max_monomials() if limit is None else limit
    if count > limit:
        raise ResourceBoundError(f"enumeration of {count} objects exceeds ceiling {limit}")


def _fill(F: Partition, m: int) -> Iterator[tuple]:
    """Row-major DFS over semistandard fillings with entries 1..m."""
    cells = [(i, j) for i, row in enumerate(F) for j in range(row)]
    grid = [[0] * row for row in F]

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # entries in row i need room for the rows below in this column
        hi = m - (conjugate_len(F, j) - 1 - i)
        for v in range(lo, hi + 1):
            grid[i][j] = v
            yield from rec(k + 1)
        grid[i][j] = 0

    yield from rec(0)


def conjugate_len(F: Partition, j: int) -> int:
    return sum(1 for f in F if f > j)


def ssyt_enumerate(F: Sequence[int], max_entry: int, limit: int | None = None) -> list:
    """Every SSYT of shape F with entries in 1..max_entry, in row-major lex order."""
    F = Partition(F)
    if max_entry < 1:
        raise FencekitError("max_entry must be at least 1")
    if len(F) > max_entry:
        return []
    _guard(predicted_ssyt_count(F, max_entry), limit)
    return [Tableau(F, rows) for rows in _fill(F, max_entry)]


def schur_polynomial(F: Sequence[int], nvars: int, limit: int | None = None) -> IntPolynomial:
    """Sum over SSYT of x^content, as {exponent tuple: coefficient}."""
    if nvars < 1:
        raise FencekitError("nvars must be at least 1")
    return dict(_schur_cached(Partition(F), nvars, limit))


@lru_cache(maxsize=4096)
def _schur_cached(F: Partition, nvars: int, limit):
    poly = Counter()
    for t in ssyt_enumerate(F, nvars, limit):
        poly[t.content(nvars)] += 1
    return tuple(sorted(poly.items()))


def kostka(F: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of shape F and the given content.

    Counted as chains of horizontal strips ``∅ ⊂ λ1 ⊂ ... ⊂ F`` where the
    i-th strip has ``content[i]`` boxes; no tableau is materialised.
    """
    F = Partition(F)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise FencekitError("content entries must be nonnegative")
    if sum(content) != F.size:
        return 0
    return _kostka_chain(F, content)


@lru_cache(maxsize=None)
def _kostka_chain(F: Partition, content: tuple) -> int:
    if not content:
        return 1 if not F else 0
    *rest, last = content
    total = 0
    # remove a horizontal strip of size `last` from F
    for inner in _horizontal_strip_removals(F, last):
        total += _kostka_chain(inner, tuple(rest))
    return total


def _horizontal_strip_removals(F: Partition, k: int) -> Iterator[Partition]:
    rows = len(F)
    nxt = list(F[1:]) + [0]

    def rec(i, remaining):
        if i == rows:
            if remaining == 0:
                yield ()
            return
        for take in range(min(remaining, F[i] - nxt[i]), -1, -1):
            for rest in rec(i + 1, remaining - take):
                yield (F[i] - take,) + rest

    for parts in rec(0, k):
        yield Partition(parts)


# -- polynomial helpers ------------------------------------------------------

def poly_add(p: IntPolynomial, q: IntPolynomial, scale: int = 1) -> IntPolynomial:
    out = dict(p)
    for mono, c in q.items():
        v = out.get(mono, 0) + scale * c
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return out


def poly_mul(p: IntPolynomial, q: IntPolynomial, limit: int | None = None) -> IntPolynomial:
    _guard(len(p) * len(q), limit)
    out: Dict[tuple, int] = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            out[mono] = out.get(mono, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _embed(poly: IntPolynomial, offset: int, total: int) -> IntPolynomial:
    return {(0,) * offset + mono + (0,) * (total - offset - len(mono)): c for mono, c in poly.items()}


def block_schur_product(labels: Sequence[Partition], block_sizes: Sequence[int]) -> IntPolynomial:
    """``prod_i s_{labels[i]}`` with block i using its own variables."""
    total = sum(block_sizes)
    out: IntPolynomial = {(0,) * total: 1}
    offset = 0
    for lab, size in zip(labels, block_sizes):
        out = poly_mul(out, _embed(schur_polynomial(lab, size), offset, total))
        offset += size
    return out


def _check_block_symmetric(p: IntPolynomial, block_sizes: Sequence[int]):
    spans, start = [], 0
    for b in block_sizes:
        spans.append((start, start + b))
        start += b
    orbits: Dict[tuple, list] = {}
    for mono, c in p.items():
        if len(mono) != start:
            raise FencekitError(f"monomial {mono} does not have {start} variables")
        key = tuple(tuple(sorted(mono[a:b], reverse=True)) for a, b in spans)
        orbits.setdefault(key, []).append(c)
    for key, coeffs in orbits.items():
        size = 1
        for block in key:
            size *= factorial(len(block)) // prod(factorial(v) for v in Counter(block).values())
        if len(coeffs) != size or len(set(coeffs)) != 1:
            raise FencekitError("polynomial is not symmetric in its variables")


def expand_in_block_schur(p: IntPolynomial, block_sizes: Sequence[int]) -> Dict[tuple, int]:
    """Coefficients of ``prod_i s_{D_i}(block i)`` in a block-symmetric ``p``."""
    block_sizes = tuple(block_sizes)
    _check_block_symmetric(p, block_sizes)
    rest = dict(p)
    out: Dict[tuple, int] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        labels, start = [], 0
        for b in block_sizes:
            labels.append(Partition(lead[start:start + b]))
            start += b
        key = tuple(labels)
        out[key] = out.get(key, 0) + c
        rest = poly_add(rest, block_schur_product(labels, block_sizes), -c)
    return out


def expand_in_schur(p: IntPolynomial, nvars: int) -> Dict[Partition, int]:
    """Schur-basis coefficients of a symmetric polynomial in ``nvars`` variables."""
    return {labels[0]: c for labels, c in expand_in_block_schur(p, (nvars,)).items()}


def branch_via_specialization(F: Sequence[int], arm_sizes: Sequence[int], D: Sequence[Sequence[int]]) -> int:
    """Multiplicity of ``⊗ rho_{c_i}^{D_i}`` in ``rho_c^F`` restricted to ``prod GL_{c_i}``.

    Splits the ``c`` variables of ``s_F`` into blocks of sizes ``c_i`` and
    reads off the coefficient of ``prod s_{D_i}(block i)``.
    """
    F = Partition(F)
    arm_sizes = tuple(int(c) for c in arm_sizes)
    D = tuple(Partition(x) for x in D)
    if len(D) != len(arm_sizes):
        raise FencekitError("need one diagram per arm")
    if any(c < 1 for c in arm_sizes):
        raise FencekitError("arm sizes must be positive")
    if any(len(x) > c for x, c in zip(D, arm_sizes)) or len(F) > sum(arm_sizes):
        return 0
    if F.size != sum(x.size for x in D):
        return 0
    return branching_table(F, arm_sizes).get(D, 0)


@lru_cache(maxsize=1024)
def branching_table(F: Partition, arm_sizes: tuple) -> Dict[tuple, int]:
    """Full decomposition of ``s_F`` restricted to blocks of sizes ``arm_sizes``."""
    return expand_in_block_schur(schur_polynomial(F, sum(arm_sizes)), arm_sizes)


def schur_product_coefficients(D: Sequence[int], E: Sequence[int], nvars: int | None = None) -> Dict[Partition, int]:
    """Schur expansion of ``s_D * s_E``; by default in ``l(D)+l(E)`` variables,
    which is enough for no term to be lost."""
    D, E = Partition(D), Partition(E)
    if nvars is None:
        nvars = max(1, len(D) + len(E))
    return expand_in_schur(poly_mul(schur_polynomial(D, nvars), schur_polynomial(E, nvars)), nvars)


def monomial_symmetric(exponents: Sequence[int], nvars: int) -> IntPolynomial:
    """Orbit sum of ``x^exponents`` (used to build test inputs)."""
    base = tuple(exponents) + (0,) * (nvars - len(exponents))
    return {perm: 1 for perm in set(itertools.permutations(base))}


__all__ = [
    "Tableau",
    "ssyt_enumerate",
    "schur_polynomial",
    "kostka",
    "expand_in_schur",
    "expand_in_block_schur",
    "branch_via_specialization",
    "branching_table",
    "schur_product_coefficients",
    "poly_mul",
    "poly_add",
    "predicted_ssyt_count",
    "EMPTY",
]
