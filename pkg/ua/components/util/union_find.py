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

from typing import Dict, List


class UnionFind:
    """A disjoint-set forest over the integers 0..size-1 with path halving and union by size."""

    def __init__(self, size: int) -> None:
        self._parent = list(range(size))
        self._size = [1] * size

    def find(self, element: int) -> int:
        parent = self._parent
        while parent[element] != element:
            parent[element] = parent[parent[element]]
            element = parent[element]
        return element

    def union(self, first: int, second: int) -> bool:
        """Merges the sets containing the two elements.

        :return: True if the elements were in different sets, False if nothing changed
        """
        first, second = self.find(first), self.find(second)
        if first == second:
            return False

        if self._size[first] < self._size[second]:
            first, second = second, first

        self._parent[second] = first
        self._size[first] += self._size[second]
        return True

    def groups(self) -> List[List[int]]:
        """Returns the sets, each sorted, ordered by their least element."""
        groups: Dict[int, List[int]] = {}
        for element in range(len(self._parent)):
            groups.setdefault(self.find(element), []).append(element)
        return list(groups.values())
