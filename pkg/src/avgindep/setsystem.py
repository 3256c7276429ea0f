"""Average member size of a set family, and an element whose deletion lowers it.

Families are explicit: a ground-set bitmask plus a tuple of member bitmasks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .engine import BRUTE_FORCE_MAX
from .graph import CapacityError, Graph, bits


class DegenerateFamilyError(ValueError):
    """All members have the same cardinality, so no decreasing element need exist."""


@dataclass(frozen=True)
class SetFamily:
    ground: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.members)) != len(self.members):
            raise ValueError("duplicate members")
        for m in self.members:
            if m & ~self.ground:
                raise ValueError(f"member {sorted(bits(m))} not contained in the ground set")

    @classmethod
    def of(cls, ground: set[int] | list[int], members) -> "SetFamily":
        """Build from plain Python sets of non-negative integers."""
        g = sum(1 << x for x in set(ground))
        return cls(g, tuple(sum(1 << x for x in set(m)) for m in members))

    def __len__(self) -> int:
        return len(self.members)

    def size_counts(self) -> Counter:
        """n_k: number of members of each cardinality."""
        return Counter(m.bit_count() for m in self.members)

    def size_sum(self) -> int:
        """S: total of the member cardinalities."""
        return sum(m.bit_count() for m in self.members)

    def square_sum(self) -> int:
        return sum(m.bit_count() ** 2 for m in self.members)

    def restrict(self, x: int) -> "SetFamily":
        """Members avoiding ``x``, over the ground set without ``x``."""
        bit = 1 << x
        return SetFamily(self.ground & ~bit, tuple(m for m in self.members if not m & bit))


def family_average(f: SetFamily) -> Fraction:
    if not f.members:
        raise ValueError("average of an empty family is undefined")
    return Fraction(f.size_sum(), len(f.members))


def averaged_ratio(f: SetFamily) -> Fraction:
    """Pooled average over all single-element restrictions.

    Sum over x of S(restricted) divided by sum over x of |restricted|; this is
    strictly below the family average whenever the sizes are not all equal.
    """
    num = den = 0
    for x in bits(f.ground):
        r = f.restrict(x)
        num += r.size_sum()
        den += len(r)
    return Fraction(num, den)


def find_decreasing_element(f: SetFamily) -> int:
    """Ground element whose deletion strictly lowers the average member size.

    Returns the element minimising the restricted average (smallest index on ties).
    """
    if len(f.size_counts()) <= 1:
        raise DegenerateFamilyError("degenerate family: all members have the same size")
    best, best_avg = None, None
    for x in bits(f.ground):
        r = f.restrict(x)
        if not r.members:
            continue
        av = family_average(r)
        if best_avg is None or av < best_avg:
            best, best_avg = x, av
    if best is None or not best_avg < family_average(f):
        raise AssertionError("no decreasing element found for a non-degenerate family")
    return best


def independent_family(g: Graph) -> SetFamily:
    """All independent sets of ``g`` (the empty set included) over its vertex set."""
    if g.order() > BRUTE_FORCE_MAX:
        raise CapacityError(f"explicit families are capped at {BRUTE_FORCE_MAX} vertices")
    members = [0]
    # vertices in increasing order; each set seen so far may take v if it avoids N(v)
    for v in g.vertices():
        members += [s | (1 << v) for s in members if not g.adj[v] & s]
    return SetFamily(g.present, tuple(members))
