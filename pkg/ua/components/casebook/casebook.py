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

import math
from collections import deque
from functools import reduce
from typing import List, Optional, Sequence

from ua.components.algebra.algebra_core import op_kind
from ua.components.powers.powers import tuple_format
from ua.models.algebra import OpKind, UnaryAlgebra
from ua.models.errors import (EmptyInputError, IndexRangeError, InvalidAlgebraError, InvalidTupleError,
                              LengthMismatchError)
from ua.models.powers import PowerTuple


def chain_algebra() -> UnaryAlgebra:
    """Returns the three-element chain {0, 1, 2} with f(x) = max(x - 1, 0)."""
    return UnaryAlgebra(carrier_size=3, ops={"f": (0, 0, 1)}, name="chain")


def cycle_algebra(cycle_lengths: Sequence[int], name: Optional[str] = None) -> UnaryAlgebra:
    """Returns the mono-unary algebra whose operation f is a product of disjoint cycles on consecutive elements."""
    if len(cycle_lengths) == 0:
        raise EmptyInputError("At least one cycle length is required")
    if any(length < 1 for length in cycle_lengths):
        raise IndexRangeError(f"Cycle lengths must be positive, got {list(cycle_lengths)}")

    table = []
    start = 0
    for length in cycle_lengths:
        table.extend(start + (offset + 1) % length for offset in range(length))
        start += length

    return UnaryAlgebra(carrier_size=start,
                        ops={"f": tuple(table)},
                        name=name or "cycles-" + "-".join(str(length) for length in cycle_lengths))


def _lcm(first: int, second: int) -> int:
    return first * second // math.gcd(first, second)


def tuple_cycle_length(cycle_lengths: Sequence[int]) -> int:
    """Returns the least common multiple of the cycle lengths of the entries of a tuple.

    :raises EmptyInputError: if no cycle lengths are given
    """
    if len(cycle_lengths) == 0:
        raise EmptyInputError("At least one cycle length is required")
    if any(length < 1 for length in cycle_lengths):
        raise IndexRangeError(f"Cycle lengths must be positive, got {list(cycle_lengths)}")
    return reduce(_lcm, cycle_lengths, 1)


def cycle_length_sequence(algebra: UnaryAlgebra, op_name: str, element: PowerTuple) -> List[int]:
    """Returns for every entry of a tuple the length of the cycle of a bijective operation through it."""
    table = algebra.table(op_name)
    if op_kind(table) != OpKind.Bijection:
        raise InvalidAlgebraError(f"Operation '{op_name}' is not a bijection")

    lengths = []
    for entry in element:
        if not 0 <= entry < algebra.carrier_size:
            raise InvalidTupleError(f"Entry {entry} is not in 0..{algebra.carrier_size - 1}")

        length = 1
        current = table[entry]
        while current != entry:
            current = table[current]
            length += 1
        lengths.append(length)

    return lengths


def transposition_algebra(carrier_size: int) -> UnaryAlgebra:
    """Returns {0, ..., m - 1} with one operation t<i>_<j> swapping i and j for every pair i < j."""
    ops = {}
    for first in range(carrier_size):
        for second in range(first + 1, carrier_size):
            table = list(range(carrier_size))
            table[first], table[second] = second, first
            ops[f"t{first}_{second}"] = tuple(table)
    return UnaryAlgebra(carrier_size=carrier_size, ops=ops, name=f"transpositions-{carrier_size}")


def transposition_distance(carrier_size: int, source: PowerTuple, target: PowerTuple) -> Optional[int]:
    """Returns the least number of pointwise transpositions turning source into target.

    Transpositions are bijections and keep the format of a tuple, tuples with different formats are unreachable.

    :return: the distance, None if target cannot be reached
    :raises LengthMismatchError: if the tuples have different lengths
    """
    if len(source) != len(target):
        raise LengthMismatchError(f"Tuples have lengths {len(source)} and {len(target)}")
    for entry in tuple(source) + tuple(target):
        if not 0 <= entry < carrier_size:
            raise InvalidTupleError(f"Entry {entry} is not in 0..{carrier_size - 1}")

    source, target = tuple(source), tuple(target)
    if tuple_format(source) != tuple_format(target):
        return None

    swaps = [(first, second) for first in range(carrier_size) for second in range(first + 1, carrier_size)]

    distances = {source: 0}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == target:
            return distances[current]

        for first, second in swaps:
            image = tuple(second if entry == first else first if entry == second else entry for entry in current)
            if image not in distances:
                distances[image] = distances[current] + 1
                queue.append(image)

    return None
