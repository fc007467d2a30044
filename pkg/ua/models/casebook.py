# UA - finite unary algebras and their subdirect powers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools
from typing import Dict, Iterable, List, Sequence, Tuple

from pydantic import root_validator

from ua.models.errors import InvalidFieldOfSetsError
from ua.models.pydantic import WrappedBaseModel


class FieldOfSets(WrappedBaseModel):
    """A family of subsets of X = {0, ..., ground_size - 1} containing the empty set and X,
    closed under complement and union.

    Members are bitmasks, bit i is set when element i belongs to the member.
    """
    ground_size: int
    members: Tuple[int, ...]

    @root_validator(skip_on_failure=True)
    def _check_field(cls, values):
        ground_size = values["ground_size"]
        if ground_size < 1:
            raise InvalidFieldOfSetsError(f"The ground set must have at least one element, got {ground_size}")

        full = (1 << ground_size) - 1
        members = set(values["members"])

        for member in members:
            if not 0 <= member <= full:
                raise InvalidFieldOfSetsError(f"Member {member:b} is not a subset of the ground set")
        if 0 not in members or full not in members:
            raise InvalidFieldOfSetsError("A field of sets must contain the empty set and the ground set")

        for member in members:
            if full ^ member not in members:
                raise InvalidFieldOfSetsError(f"The complement of {cls.format_member(member, ground_size)} "
                                              f"is missing")
        for first, second in itertools.combinations(members, 2):
            if first | second not in members:
                raise InvalidFieldOfSetsError(f"The union of {cls.format_member(first, ground_size)} and "
                                              f"{cls.format_member(second, ground_size)} is missing")

        values["members"] = tuple(sorted(members))
        return values

    @staticmethod
    def format_member(member: int, ground_size: int) -> str:
        """Renders a member as a binary string, the leftmost character being element 0."""
        return "".join("1" if member >> element & 1 else "0" for element in range(ground_size))

    @classmethod
    def powerset(cls, ground_size: int) -> "FieldOfSets":
        return cls(ground_size=ground_size, members=tuple(range(1 << ground_size)))

    @classmethod
    def trivial(cls, ground_size: int) -> "FieldOfSets":
        return cls(ground_size=ground_size, members=(0, (1 << ground_size) - 1))

    @classmethod
    def from_atoms(cls, ground_size: int, atoms: Iterable[Iterable[int]]) -> "FieldOfSets":
        """Returns the field of all unions of the given atoms, which must partition the ground set."""
        masks = []
        covered = 0
        for atom in atoms:
            mask = 0
            for element in atom:
                mask |= 1 << element
            if mask == 0 or mask & covered or mask >> ground_size:
                raise InvalidFieldOfSetsError("The atoms must be nonempty, disjoint subsets of the ground set")
            covered |= mask
            masks.append(mask)
        if covered != (1 << ground_size) - 1:
            raise InvalidFieldOfSetsError("The atoms must cover the ground set")

        members = set()
        for count in range(len(masks) + 1):
            for combination in itertools.combinations(masks, count):
                union = 0
                for mask in combination:
                    union |= mask
                members.add(union)

        return cls(ground_size=ground_size, members=tuple(members))

    def atoms(self) -> List[int]:
        """Returns the minimal nonempty members."""
        return [member for member in self.members
                if member != 0 and not any(other != member and other != 0 and other & member == other
                                           for other in self.members)]

    def __contains__(self, member: int) -> bool:
        return member in set(self.members)


class BooleanPowerProfile(WrappedBaseModel):
    """The depth-two shape of the digraph of a boolean power of the chain algebra.

    predecessor_counts maps every strict predecessor of the sink, as tuple literal, to its own number of strict
    predecessors; count_multiset counts how many predecessors of the sink have each such number.
    """
    sink: Tuple[int, ...]
    sink_predecessors: int
    predecessor_counts: Dict[str, int]
    count_multiset: Dict[int, int]

    @property
    def shape(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """Returns the part of the profile that does not depend on the naming of the ground set."""
        return self.sink_predecessors, tuple(sorted(self.count_multiset.items()))


def counts_to_multiset(counts: Sequence[int]) -> Dict[int, int]:
    multiset: Dict[int, int] = {}
    for count in counts:
        multiset[count] = multiset.get(count, 0) + 1
    return dict(sorted(multiset.items()))
