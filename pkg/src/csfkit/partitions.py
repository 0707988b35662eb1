"""Set partitions of {1..d}: enumeration, the refinement lattice, surgeries.

Every sparse coefficient map downstream is indexed by SetPartition, so the
canonical form (blocks sorted ascending, ordered by minimum element) is
load-bearing: two partitions are equal iff their canonical forms coincide.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

from .errors import CapacityError, DomainError

#: integer partitions are plain weakly-decreasing tuples of positive ints
IntPartition = tuple

DEFAULT_GROUND_SET_CAP = 10


def ground_set_cap(default: int = DEFAULT_GROUND_SET_CAP) -> int:
    """Active cap on ground-set sizes; CSFKIT_MAX_D overrides the default."""
    env = os.environ.get("CSFKIT_MAX_D")
    return int(env) if env else default


class CongruenceKey(NamedTuple):
    """Invariant pair (block-size type, size of the block holding the anchor)."""

    type: IntPartition
    marked: int


class SetPartition:
    """A partition of {1..d} into disjoint nonempty blocks, kept canonical."""

    __slots__ = ("d", "blocks", "_block_at", "_hash")

    def __init__(self, d: int, blocks: Iterable[Iterable[int]]):
        if d < 0:
            raise DomainError("ground-set size must be nonnegative")
        canon = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[:1])
        if any(not b for b in canon):
            raise DomainError("empty block")
        self.d = d
        self.blocks = tuple(canon)
        block_at = [0] * (d + 1)
        count = 0
        for idx, block in enumerate(self.blocks):
            for x in block:
                if not 1 <= x <= d:
                    raise DomainError(f"element {x} outside 1..{d}")
                block_at[x] = idx
                count += 1
        if count != d or len({x for b in self.blocks for x in b}) != d:
            raise DomainError(f"blocks must partition 1..{d} exactly")
        self._block_at = tuple(block_at)
        self._hash = hash((d, self.blocks))

    @classmethod
    def from_string(cls, text: str) -> "SetPartition":
        """Parse "13|2" (digits juxtaposed) or "1,13|2" (comma form, d > 9)."""
        blocks = []
        for chunk in text.split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise DomainError(f"empty block in {text!r}")
            if "," in chunk:
                blocks.append([int(tok) for tok in chunk.split(",")])
            else:
                blocks.append([int(ch) for ch in chunk])
        d = sum(len(b) for b in blocks)
        return cls(d, blocks)

    def __str__(self) -> str:
        sep = "," if self.d > 9 else ""
        return "|".join(sep.join(str(x) for x in b) for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({str(self)!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetPartition)
            and self.d == other.d
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other) -> bool:
        return is_refinement(self, other)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> tuple:
        if not 1 <= i <= self.d:
            raise DomainError(f"element {i} outside 1..{self.d}")
        return self.blocks[self._block_at[i]]

    def same_block(self, i: int, j: int) -> bool:
        return self._block_at[i] == self._block_at[j]


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell_number(k) for k in range(n))


def set_partitions(d: int) -> tuple:
    """All partitions of {1..d}, in restricted-growth-string lexicographic order."""
    if d < 1:
        raise DomainError("d must be positive")
    cap = ground_set_cap()
    if d > cap:
        raise CapacityError(f"d={d} exceeds the ground-set cap {cap}")
    return _set_partitions_cached(d)


@lru_cache(maxsize=None)
def _set_partitions_cached(d: int) -> tuple:
    out = []
    rgs = [0] * d

    def walk(pos: int, width: int) -> None:
        if pos == d:
            blocks = [[] for _ in range(width)]
            for el in range(d):
                blocks[rgs[el]].append(el + 1)
            out.append(SetPartition(d, blocks))
            return
        for b in range(width + 1):
            rgs[pos] = b
            walk(pos + 1, width if b < width else width + 1)

    walk(0, 0)
    return tuple(out)


def finest(d: int) -> SetPartition:
    return SetPartition(d, ([i] for i in range(1, d + 1)))


def coarsest(d: int) -> SetPartition:
    return SetPartition(d, [range(1, d + 1)])


def type_of(p: SetPartition) -> IntPartition:
    """Block sizes as a weakly decreasing integer partition."""
    return tuple(sorted((len(b) for b in p.blocks), reverse=True))


def block_size_containing(p: SetPartition, i: int) -> int:
    return len(p.block_of(i))


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """Coarsest common refinement: nonempty pairwise block intersections."""
    if a.d != b.d:
        raise DomainError("mismatched ground sets")
    buckets: dict = {}
    for x in range(1, a.d + 1):
        buckets.setdefault((a._block_at[x], b._block_at[x]), []).append(x)
    return SetPartition(a.d, buckets.values())


def meet_is_finest(a: SetPartition, b: SetPartition) -> bool:
    """True iff the meet is the all-singletons partition (cheap early exit)."""
    if a.d != b.d:
        raise DomainError("mismatched ground sets")
    seen = set()
    for x in range(1, a.d + 1):
        key = (a._block_at[x], b._block_at[x])
        if key in seen:
            return False
        seen.add(key)
    return True


def is_refinement(a: SetPartition, b: SetPartition) -> bool:
    """a <= b: every block of a sits inside a block of b."""
    if a.d != b.d:
        raise DomainError("mismatched ground sets")
    at = b._block_at
    for block in a.blocks:
        target = at[block[0]]
        if any(at[x] != target for x in block):
            return False
    return True


def mobius(a: SetPartition, b: SetPartition):
    """Mobius value of the interval [a, b] in the refinement order.

    Product over blocks B of b of (-1)^(n-1) (n-1)! with n the number of
    a-blocks inside B.  Always an integer.
    """
    if not is_refinement(a, b):
        raise DomainError("mobius requires a <= b in refinement order")
    counts: dict = {}
    for block in a.blocks:
        root = b._block_at[block[0]]
        counts[root] = counts.get(root, 0) + 1
    val = 1
    for n in counts.values():
        val *= (-1) ** (n - 1) * factorial(n - 1)
    return val


def mobius_from_finest(p: SetPartition) -> int:
    val = 1
    for block in p.blocks:
        n = len(block)
        val *= (-1) ** (n - 1) * factorial(n - 1)
    return val


def add_block(p: SetPartition, new_block: Iterable[int]) -> SetPartition:
    """Adjoin a block of fresh elements d+1..d+k."""
    nb = tuple(sorted(new_block))
    if nb != tuple(range(p.d + 1, p.d + len(nb) + 1)) or not nb:
        raise DomainError("new block must be the next contiguous elements")
    return SetPartition(p.d + len(nb), p.blocks + (nb,))


def insert_element(p: SetPartition, i: int, pos: int) -> SetPartition:
    """Insert a fresh element at label pos into the block containing i.

    Existing elements >= pos slide up by one; requires i < pos.  With
    pos = d+1 this is plain insertion of a largest element.
    """
    if not 1 <= i <= p.d or not i < pos <= p.d + 1:
        raise DomainError("need 1 <= i < pos <= d+1")
    blocks = [tuple(x if x < pos else x + 1 for x in b) for b in p.blocks]
    target = p._block_at[i]
    blocks[target] += (pos,)
    return SetPartition(p.d + 1, blocks)


def insert_into_block_of(p: SetPartition, i: int) -> SetPartition:
    """Insert the new largest element d+1 into the block containing i."""
    return insert_element(p, i, p.d + 1)


def delete_top_element(p: SetPartition) -> SetPartition:
    """Remove element d (inverse of insert_into_block_of at the top)."""
    if p.d < 2:
        raise DomainError("nothing left after deleting from d=1")
    blocks = [tuple(x for x in b if x != p.d) for b in p.blocks]
    return SetPartition(p.d - 1, [b for b in blocks if b])


def apply_transposition(p: SetPartition, a: int, b: int) -> SetPartition:
    """Swap the elements a and b, re-canonicalizing."""
    if not (1 <= a <= p.d and 1 <= b <= p.d):
        raise DomainError("transposition elements outside 1..d")
    if a == b:
        return p
    swap = {a: b, b: a}
    return SetPartition(p.d, ([swap.get(x, x) for x in blk] for blk in p.blocks))


def congruence_key(p: SetPartition, i: int) -> CongruenceKey:
    """(type, size of the block containing i); equal keys = congruent mod i."""
    return CongruenceKey(type_of(p), block_size_containing(p, i))


def refinements(p: SetPartition) -> Iterator[SetPartition]:
    """All partitions <= p, by refining each block independently."""
    per_block = []
    for block in p.blocks:
        opts = []
        for q in set_partitions(len(block)):
            opts.append(tuple(tuple(block[x - 1] for x in sub) for sub in q.blocks))
        per_block.append(opts)
    for combo in product(*per_block):
        yield SetPartition(p.d, [b for group in combo for b in group])


def coarsenings(p: SetPartition) -> Iterator[SetPartition]:
    """All partitions >= p, by merging whole blocks of p."""
    for grouping in set_partitions(p.num_blocks):
        yield SetPartition(
            p.d,
            [
                sorted(x for bi in grp for x in p.blocks[bi - 1])
                for grp in grouping.blocks
            ],
        )
