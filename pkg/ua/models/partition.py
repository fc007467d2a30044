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

from typing import Hashable, List, Sequence, Tuple

from pydantic import validator

from ua.components.util.union_find import UnionFind
from ua.models.pydantic import WrappedBaseModel


class Partition(WrappedBaseModel):
    """A partition of {0, ..., size - 1} into nonempty blocks.

    Blocks are sorted and ordered by their least element,
    so two partitions of the same set are equal exactly when they have the same blocks.
    """
    size: int
    blocks: Tuple[Tuple[int, ...], ...]

    @validator("blocks")
    def _normalize_blocks(cls, blocks: Tuple[Tuple[int, ...], ...], values) -> Tuple[Tuple[int, ...], ...]:
        size = values.get("size", 0)
        seen = [element for block in blocks for element in block]

        if any(len(block) == 0 for block in blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(seen) != list(range(size)):
            raise ValueError(f"blocks must be disjoint and cover 0..{size - 1}")

        return tuple(sorted(tuple(sorted(block)) for block in blocks))

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable]) -> "Partition":
        """Returns the kernel of a map given by its values, the partition of positions holding equal values."""
        blocks = {}
        for position, label in enumerate(labels):
            blocks.setdefault(label, []).append(position)
        return cls.construct(size=len(labels), blocks=tuple(tuple(block) for block in blocks.values()))

    @classmethod
    def discrete(cls, size: int) -> "Partition":
        return cls.from_labels(range(size))

    @classmethod
    def total(cls, size: int) -> "Partition":
        return cls.construct(size=size, blocks=(tuple(range(size)),) if size > 0 else ())

    @property
    def class_count(self) -> int:
        return len(self.blocks)

    def labels(self) -> List[int]:
        """Returns for every element the index of its block."""
        labels = [0] * self.size
        for index, block in enumerate(self.blocks):
            for element in block:
                labels[element] = index
        return labels

    def block_of(self, element: int) -> Tuple[int, ...]:
        for block in self.blocks:
            if element in block:
                return block
        raise ValueError(f"{element} is not in 0..{self.size - 1}")

    def is_discrete(self) -> bool:
        return self.class_count == self.size

    def is_total(self) -> bool:
        return self.class_count <= 1

    def refines(self, other: "Partition") -> bool:
        """Returns whether every block of this partition lies inside a block of the other one."""
        other_labels = other.labels()
        return all(len({other_labels[element] for element in block}) == 1 for block in self.blocks)

    def meet(self, other: "Partition") -> "Partition":
        """Returns the coarsest common refinement."""
        return type(self).from_labels(list(zip(self.labels(), other.labels())))

    def join(self, other: "Partition") -> "Partition":
        """Returns the finest common coarsening."""
        union_find = UnionFind(self.size)
        for block in self.blocks + other.blocks:
            for element in block[1:]:
                union_find.union(block[0], element)
        return type(self).construct(size=self.size, blocks=tuple(tuple(group) for group in union_find.groups()))

    def __hash__(self) -> int:
        return hash((self.size, self.blocks))

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(str(element) for element in block) + "}" for block in self.blocks) + "}"
