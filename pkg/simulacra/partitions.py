'''Constrained integer partitions, generated as ascending lists'''

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional

from exceptions import InvalidInput

Weight = Callable[[int], int]


@dataclass(frozen=True)
class PartitionConstraints:
    """
    Which partitions of `total` to generate.

    :param min_part: smallest allowed part
    :param max_part: largest allowed part, None for unbounded
    :param skip_two: omit every partition containing a part 2 (for Lorentz parts 2 and 1+1
                     describe the same cone)
    :param weight: optional part weight; when given, only partitions whose weights add up to
                   `weight_target` are generated. The weight has to vanish at zero, be convex and
                   have w(p)/p nondecreasing, which the branch bounds rely on
    :param weight_target: required sum of weights
    """
    total: int
    min_part: int = 1
    max_part: Optional[int] = None
    skip_two: bool = False
    weight: Optional[Weight] = None
    weight_target: Optional[int] = None

    def __post_init__(self):
        if self.total < 0:
            raise InvalidInput(f"Cannot partition a negative total {self.total}")
        if self.min_part < 1:
            raise InvalidInput(f"Smallest part has to be positive, got {self.min_part}")
        if self.max_part is not None and self.max_part < self.min_part:
            raise InvalidInput(f"Largest part {self.max_part} is below the smallest part {self.min_part}")
        if (self.weight is None) != (self.weight_target is None):
            raise InvalidInput("A weight and a weight target have to be given together")

    @property
    def effective_bounds(self):
        """ Smallest and largest part that can actually occur, or None if no part can """
        lo, hi = self.min_part, self.total if self.max_part is None else min(self.max_part, self.total)
        if self.skip_two:
            lo = 3 if lo == 2 else lo
            hi = 1 if hi == 2 else hi
        return (lo, hi) if lo <= hi else None


def partitions(constraints: PartitionConstraints) -> Iterator[List[int]]:
    """
    Generate every partition satisfying `constraints` as an ascending list of parts, each
    exactly once, e.g. for total=4: [1, 1, 1, 1], [1, 1, 2], [1, 3], [2, 2], [4].

    Parts are chosen smallest first and every bound is applied while descending, so branches that
    cannot be completed are never entered. The yielded list is a buffer reused between
    partitions: copy it to keep it.
    """
    c = constraints
    if c.total == 0:
        if c.weight is None or c.weight_target == 0:
            yield []
        return
    bounds = c.effective_bounds
    if bounds is None:
        return
    lo, hi = bounds
    if not _completable(c, c.total, lo, hi, 0):
        return
    yield from _ascend(c, [], c.total, lo, hi, 0)


def partition_count(constraints: PartitionConstraints) -> int:
    return sum(1 for _ in partitions(constraints))


def max_weight(weight: Weight, total: int, max_part: int) -> int:
    """ Largest weight sum over partitions of `total` into parts <= `max_part` (greedy for convex weights) """
    if total == 0:
        return 0
    largest = min(max_part, total)
    quotient, remainder = divmod(total, largest)
    return quotient * weight(largest) + weight(remainder)


def _completable(c: PartitionConstraints, remaining: int, smallest: int, hi: int, acc: int) -> bool:
    """ Can `remaining` still be split into parts within [smallest, hi] meeting the weight target? """
    if remaining == 0:
        return c.weight is None or acc == c.weight_target
    if smallest > hi or smallest > remaining:
        return False
    # need some k parts with k * smallest <= remaining <= k * hi
    if -(-remaining // hi) * smallest > remaining:
        return False
    if c.weight is None:
        return True
    needed = c.weight_target - acc
    if needed * smallest < remaining * c.weight(smallest):
        return False
    return max_weight(c.weight, remaining, hi) >= needed


def _ascend(c: PartitionConstraints, buffer: List[int], remaining: int, smallest: int, hi: int,
            acc: int) -> Iterator[List[int]]:
    weight = c.weight
    part = smallest
    # inner parts leave at least `part` for the parts after them
    while part <= hi and 2 * part <= remaining:
        if not (c.skip_two and part == 2):
            part_acc = acc + weight(part) if weight else acc
            if _completable(c, remaining - part, part, hi, part_acc):
                buffer.append(part)
                yield from _ascend(c, buffer, remaining - part, part, hi, part_acc)
                buffer.pop()
        part += 1
    # closing part takes all that remains
    if smallest <= remaining <= hi and not (c.skip_two and remaining == 2):
        if weight is None or acc + weight(remaining) == c.weight_target:
            buffer.append(remaining)
            yield buffer
            buffer.pop()
