"""Young diagrams, compositions and the block-form bookkeeping for parabolics.

A :class:`Partition` labels a polynomial irreducible representation of a
general linear group by its highest weight.  A :class:`Composition`
``(k_1, ..., k_s)`` of ``k`` fixes the block upper triangular parabolic
``P_k`` of ``GL_k``; its commutator subgroup ``P'_k`` has a one-dimensional
invariant line in ``rho_k^F`` exactly when ``F`` is constant on every block.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import FencekitError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros stripped.

    >>> Partition([4, 4, 3, 2, 2, 0])
    Partition(4, 4, 3, 2, 2)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise FencekitError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise FencekitError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "()"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, k: int) -> tuple:
        if len(self) > k:
            raise FencekitError(f"{self!r} has more than {k} rows")
        return tuple(self) + (0,) * (k - len(self))

    def contains(self, other: Sequence[int]) -> bool:
        """True when ``other`` fits inside this diagram."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))


EMPTY = Partition()


class Composition(tuple):
    """Ordered block sizes ``(k_1, ..., k_s)``, each at least 1."""

    def __new__(cls, blocks: Iterable[int]):
        blocks = tuple(int(x) for x in blocks)
        if not blocks:
            raise FencekitError("a composition needs at least one block")
        if any(b < 1 for b in blocks):
            raise FencekitError(f"block sizes must be positive: {blocks}")
        return super().__new__(cls, blocks)

    def __repr__(self):
        return f"Composition({', '.join(map(str, self))})"

    @property
    def total(self) -> int:
        return sum(self)

    def spans(self) -> list[range]:
        out, start = [], 0
        for b in self:
            out.append(range(start, start + b))
            start += b
        return out

    @classmethod
    def trivial(cls, k: int) -> "Composition":
        return cls((k,))

    @classmethod
    def borel(cls, k: int) -> "Composition":
        return cls((1,) * k)


def conjugate(F: Sequence[int]) -> Partition:
    """Transpose of a Young diagram."""
    F = Partition(F)
    if not F:
        return EMPTY
    return Partition(sum(1 for f in F if f > j) for j in range(F[0]))


def block_values(F: Sequence[int], comp: Composition) -> tuple | None:
    """Per-block values of ``F`` if it is constant on every block, else None."""
    F = Partition(F)
    k = comp.total
    if len(F) > k:
        raise FencekitError(f"{F!r} has {len(F)} rows, more than k={k}")
    padded = F.padded(k)
    values = []
    for span in comp.spans():
        chunk = {padded[i] for i in span}
        if len(chunk) != 1:
            return None
        values.append(chunk.pop())
    return tuple(values)


def block_compatible(F: Sequence[int], comp: Composition) -> bool:
    """True iff ``(rho_k^F)^{P'_k}`` is one-dimensional.

    ``F`` (zero padded to ``k`` rows) must be constant on each block of
    ``comp``; repeated and zero block values are allowed.
    """
    return block_values(F, Composition(comp)) is not None


def diagram_from_exponents(e: Sequence[int], comp: Composition) -> Partition:
    """Diagram with value ``e_i + ... + e_s`` repeated ``k_i`` times on block i."""
    comp = Composition(comp)
    e = tuple(int(x) for x in e)
    if len(e) != len(comp):
        raise FencekitError(f"need {len(comp)} exponents for {comp!r}, got {len(e)}")
    if any(x < 0 for x in e):
        raise FencekitError(f"exponents must be nonnegative: {e}")
    parts, tail = [], 0
    values = []
    for x in reversed(e):
        tail += x
        values.append(tail)
    values.reverse()
    for k, f in zip(comp, values):
        parts.extend([f] * k)
    return Partition(parts)


def exponents_of_diagram(F: Sequence[int], comp: Composition) -> tuple:
    """Inverse of :func:`diagram_from_exponents` on block-compatible diagrams."""
    comp = Composition(comp)
    values = block_values(F, comp)
    if values is None:
        raise FencekitError(f"{Partition(F)!r} is not constant on the blocks of {comp!r}")
    return tuple(a - b for a, b in zip(values, values[1:] + (0,)))


def weight_of_diagram(F: Sequence[int], comp: Composition) -> tuple:
    """Exponents ``(k_1 f_1, ..., k_s f_s)`` of the character of ``P_k/P'_k``."""
    comp = Composition(comp)
    values = block_values(F, comp)
    if values is None:
        raise FencekitError(f"{Partition(F)!r} is not constant on the blocks of {comp!r}")
    return tuple(k * f for k, f in zip(comp, values))


def partitions(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for p in rec(n, max_part, max_length):
        yield Partition(p)


def partitions_between(lower: Sequence[int], upper: Sequence[int], size: int) -> Iterator[Partition]:
    """Partitions ``H`` with ``lower ⊆ H ⊆ upper`` and ``|H| = size``."""
    lower = Partition(lower)
    upper = Partition(upper)
    if not upper.contains(lower):
        return
    rows = len(upper)
    lo = lower.padded(rows)
    # suffix capacity of `upper` for pruning
    cap = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        cap[i] = cap[i + 1] + upper[i]

    def rec(i, prev, remaining):
        if i == rows or remaining == 0:
            if remaining == 0 and all(lo[j] == 0 for j in range(i, rows)):
                yield ()
            return
        hi = min(prev, upper[i], remaining)
        for v in range(hi, lo[i] - 1, -1):
            if remaining - v > cap[i + 1]:
                break
            for rest in rec(i + 1, v, remaining - v):
                yield (v,) + rest

    for p in rec(0, upper[0] if rows else 0, size):
        yield Partition(p)


def compositions_of(k: int) -> Iterator[Composition]:
    """All compositions of ``k`` (``2^(k-1)`` of them)."""
    if k < 1:
        return
    for mask in range(1 << (k - 1)):
        blocks, run = [], 1
        for bit in range(k - 1):
            if mask >> bit & 1:
                blocks.append(run)
                run = 1
            else:
                run += 1
        blocks.append(run)
        yield Composition(blocks)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,4,3,2,2"``; the empty string, ``"0"`` and ``"()"`` mean ∅."""
    text = text.strip()
    if text in ("", "()", "[]", "0", "-"):
        return EMPTY
    text = text.strip("()[]")
    try:
        return Partition(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise FencekitError(f"cannot parse partition {text!r}")


def parse_composition(text: str) -> Composition:
    text = text.strip().strip("()[]")
    try:
        return Composition(int(x) for x in text.split(","))
    except ValueError:
        raise FencekitError(f"cannot parse composition {text!r}")
