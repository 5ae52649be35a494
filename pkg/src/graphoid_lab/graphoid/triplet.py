"""
Independence triplets (X, Y; Z)
"""

from typing import NamedTuple, Optional

from ..utils.exceptions import InvalidTripletError
from .universe import Universe, VarSet, disjoint


class Triplet(NamedTuple):
    """Statement "X is independent of Y given Z" over VarSet bitmasks"""
    x: VarSet
    y: VarSet
    z: VarSet

    @property
    def is_trivial(self) -> bool:
        """Empty X or Y side (trivial independence)"""
        return self.x == 0 or self.y == 0

    def swapped(self) -> 'Triplet':
        return Triplet(self.y, self.x, self.z)

    def render(self, universe: Universe) -> str:
        return (f"I({universe.format(self.x)}, {universe.format(self.y)}; "
                f"{universe.format(self.z)})")

    def to_dict(self, universe: Universe) -> dict:
        return {
            'X': universe.names_of(self.x),
            'Y': universe.names_of(self.y),
            'Z': universe.names_of(self.z),
        }


def check_triplet(x: VarSet, y: VarSet, z: VarSet,
                  universe: Optional[Universe] = None) -> None:
    """Raise InvalidTripletError unless X, Y, Z are disjoint subsets of the universe"""
    if x < 0 or y < 0 or z < 0:
        raise InvalidTripletError("variable sets must be non-negative bitmasks")
    if not disjoint(x, y, z):
        if universe is not None:
            rendered = (f"({universe.format(x)}, {universe.format(y)}; "
                        f"{universe.format(z)})")
        else:
            rendered = f"({x:#x}, {y:#x}; {z:#x})"
        raise InvalidTripletError("X, Y and Z must be pairwise disjoint", triplet=rendered)
    if universe is not None and not universe.contains(x | y | z):
        raise InvalidTripletError("variables outside the universe")


def normalize(t: Triplet) -> Triplet:
    """
    Canonical representative of {(X, Y; Z), (Y, X; Z)}

    The side with the smaller bitmask comes first, so a triplet and its
    symmetric image normalize identically.
    """
    check_triplet(t.x, t.y, t.z)
    if t.x > t.y:
        return Triplet(t.y, t.x, t.z)
    return Triplet(t.x, t.y, t.z)
