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

from typing import FrozenSet, Iterable, Iterator, Tuple

from ua.models.algebra import UnaryAlgebra
from ua.models.partition import Partition

# An element of a finite power A^N, entry i is the value at position i
PowerTuple = Tuple[int, ...]


class IndexPartition(Partition):
    """A partition of the positions 0..N-1 of a power, such as the format of a tuple."""


class Subpower:
    """A subset of A^N closed under the operations of A, together with the tuples it was generated from.

    Elements are kept in lexicographic order, which also fixes the numbering of the induced algebra.
    """

    def __init__(self,
                 base: UnaryAlgebra,
                 length: int,
                 elements: Iterable[PowerTuple],
                 generators: Iterable[PowerTuple] = ()) -> None:
        """Creates a new Subpower instance.

        :param base: the algebra A
        :param length: the size N of the index set
        :param elements: the tuples in the subpower
        :param generators: the tuples the subpower was generated from
        """
        self.base = base
        self.length = length
        self.elements: Tuple[PowerTuple, ...] = tuple(sorted(set(elements)))
        self.generators: Tuple[PowerTuple, ...] = tuple(sorted(set(generators)))
        self._index = {element: index for index, element in enumerate(self.elements)}

    def index(self, element: PowerTuple) -> int:
        """Returns the number of an element in the induced algebra."""
        return self._index[element]

    def as_set(self) -> FrozenSet[PowerTuple]:
        return frozenset(self.elements)

    def union(self, other: "Subpower") -> "Subpower":
        """Returns the union of two subpowers of the same power, which is closed again."""
        return Subpower(self.base, self.length, self.elements + other.elements, self.generators + other.generators)

    def intersection(self, other: "Subpower") -> FrozenSet[PowerTuple]:
        return self.as_set() & other.as_set()

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PowerTuple]:
        return iter(self.elements)

    def __contains__(self, element: PowerTuple) -> bool:
        return tuple(element) in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subpower):
            return NotImplemented
        return self.base == other.base and self.length == other.length and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.length, self.elements))

    def __repr__(self) -> str:
        return f"Subpower(base={self.base.display_name()!r}, N={self.length}, size={len(self)})"
