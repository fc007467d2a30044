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

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import validator

from ua.models.errors import InvalidAlgebraError, UnknownOpError
from ua.models.partition import Partition
from ua.models.pydantic import WrappedBaseModel

# An operation table, entry a holds the image of carrier element a
Table = Tuple[int, ...]


class OpKind(str, Enum):
    Bijection = "bijection"
    Constant = "constant"
    Other = "other"


class AlgebraType(str, Enum):
    Countable = "countable"
    Uncountable = "uncountable"


class UnaryAlgebra(WrappedBaseModel):
    """A finite carrier {0, ..., carrier_size - 1} with a named family of unary operations.

    The operations keep the order in which they were given, which is the order used for reporting.
    """
    carrier_size: int
    ops: Dict[str, Table] = {}
    name: Optional[str] = None

    @validator("carrier_size")
    def _carrier_size_positive(cls, value: int) -> int:
        if value < 1:
            raise InvalidAlgebraError(f"The carrier size must be at least 1, got {value}")
        return value

    @validator("ops")
    def _tables_in_range(cls, ops: Dict[str, Table], values) -> Dict[str, Table]:
        carrier_size = values.get("carrier_size")
        if carrier_size is None:
            return ops

        for name, table in ops.items():
            if name == "" or not name.isascii() or any(char.isspace() for char in name):
                raise InvalidAlgebraError(f"Operation name '{name}' must be a nonempty ASCII word")

            if len(table) != carrier_size:
                raise InvalidAlgebraError(
                    f"Operation '{name}' has {len(table)} entries but the carrier has {carrier_size} elements")

            for element, image in enumerate(table):
                if not 0 <= image < carrier_size:
                    raise InvalidAlgebraError(
                        f"Operation '{name}' maps {element} to {image}, which is not in 0..{carrier_size - 1}")

        return ops

    @property
    def op_names(self) -> List[str]:
        return list(self.ops.keys())

    @property
    def sorted_op_names(self) -> List[str]:
        return sorted(self.ops.keys())

    @property
    def identity(self) -> Table:
        return tuple(range(self.carrier_size))

    def table(self, op_name: str) -> Table:
        """Returns the table of an operation.

        :param op_name: the name of the operation
        :return: the table of the operation
        :raises UnknownOpError: if the algebra has no operation with the given name
        """
        if op_name not in self.ops:
            raise UnknownOpError(op_name)
        return self.ops[op_name]

    def display_name(self) -> str:
        return self.name or "unnamed"

    def __str__(self) -> str:
        return f"{self.display_name()} (carrier {self.carrier_size}, ops {', '.join(self.op_names) or 'none'})"


class TypeVerdict(WrappedBaseModel):
    """The classification of an algebra: uncountable when some basic operation is neither bijective nor constant."""
    verdict: AlgebraType
    witness: Optional[str] = None
    bijections: List[str] = []
    constants: List[str] = []

    def __str__(self) -> str:
        if self.verdict == AlgebraType.Uncountable:
            return f"Uncountable (witness op: {self.witness})"

        return (f"Countable (bijections: {', '.join(self.bijections) or 'none'}; "
                f"constants: {', '.join(self.constants) or 'none'})")


class TransformationMonoid(WrappedBaseModel):
    """The monoid generated by the basic operations, ordered by word length and then lexicographically by word."""
    elements: List[Table]
    words: List[Tuple[str, ...]]

    @property
    def size(self) -> int:
        return len(self.elements)

    def word_of(self, table: Table) -> Tuple[str, ...]:
        """Returns the stored shortest word producing a table of the monoid."""
        for element, word in zip(self.elements, self.words):
            if element == table:
                return word
        raise ValueError(f"{table} is not an element of the monoid")

    def __contains__(self, table: Table) -> bool:
        return tuple(table) in set(self.elements)


class Congruence(Partition):
    """A partition of the carrier compatible with every operation of an algebra."""
