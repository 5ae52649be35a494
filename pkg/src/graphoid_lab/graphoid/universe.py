"""
Variable universes and variable sets

A VarSet is an int bitmask over the universe's ordered variable list: bit i
set means variable i is a member. Ordering VarSets by their integer value is
the canonical total order used throughout the package.
"""

from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..utils.exceptions import InputError

VarSet = int
VariableId = int

EMPTY: VarSet = 0


def bit(index: VariableId) -> VarSet:
    """Singleton VarSet for one variable"""
    return 1 << index


def from_indices(indices: Iterable[VariableId]) -> VarSet:
    """Build a VarSet from variable indices"""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def members(mask: VarSet) -> List[VariableId]:
    """Indices of the members of a VarSet, ascending"""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def cardinality(mask: VarSet) -> int:
    return bin(mask).count('1')


def subsets(mask: VarSet, nonempty: bool = False, proper: bool = False) -> Iterator[VarSet]:
    """
    Enumerate subsets of a VarSet by increasing cardinality, lexicographic
    (by member index) within each cardinality

    Args:
        mask: VarSet to enumerate
        nonempty: Skip the empty set
        proper: Skip the set itself
    """
    items = members(mask)
    start = 1 if nonempty else 0
    stop = len(items) - 1 if proper else len(items)
    for size in range(start, stop + 1):
        for combo in combinations(items, size):
            yield from_indices(combo)


def disjoint(*masks: VarSet) -> bool:
    """True iff the given VarSets are pairwise disjoint"""
    seen = 0
    for mask in masks:
        if seen & mask:
            return False
        seen |= mask
    return True


class Universe:
    """Ordered, named list of variables"""

    def __init__(self, names: Sequence[str], allow_empty: bool = False):
        names = tuple(str(name) for name in names)
        if not names and not allow_empty:
            raise InputError("a universe needs at least one variable", field="variables")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {list(names)}", field="variables")

        self.names: Tuple[str, ...] = names
        self._index: Dict[str, int] = {name: i for i, name in enumerate(names)}

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full(self) -> VarSet:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> VariableId:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown variable '{name}'", field="variables") from None

    def varset(self, names: Iterable[str]) -> VarSet:
        """VarSet for a collection of variable names"""
        return from_indices(self.index(name) for name in names)

    def parse(self, text: str) -> VarSet:
        """VarSet from a comma-separated name list; empty text is the empty set"""
        names = [part.strip() for part in (text or '').split(',')]
        return self.varset(name for name in names if name)

    def names_of(self, mask: VarSet) -> List[str]:
        if mask & ~self.full:
            raise InputError(f"variable set {mask:#x} lies outside the universe")
        return [self.names[i] for i in members(mask)]

    def format(self, mask: VarSet) -> str:
        """Render a VarSet as {a,b}"""
        return '{' + ','.join(self.names_of(mask)) + '}'

    def contains(self, mask: VarSet) -> bool:
        return mask & ~self.full == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Universe({list(self.names)!r})"
