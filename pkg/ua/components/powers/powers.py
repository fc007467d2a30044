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
from collections import deque
from typing import FrozenSet, Iterable, List, Optional, Tuple

from joblib import Parallel, delayed

from ua.constants import (DEFAULT_CARRIER_CAP, DEFAULT_CLOSED_SUBSET_CAP, DEFAULT_ELEMENT_CAP,
                          DEFAULT_ENUMERATION_CAP)
from ua.components.algebra.algebra_core import constant_values, monoid_constant_values
from ua.components.iso.isomorphism import canonical_form
from ua.models.algebra import UnaryAlgebra
from ua.models.errors import CapacityError, EmptySubpowerError, InvalidTupleError, LengthMismatchError
from ua.models.iso import CanonicalCode
from ua.models.powers import IndexPartition, PowerTuple, Subpower


def parse_tuple(text: str) -> PowerTuple:
    """Parses a tuple literal like (2,0,1,1,1)."""
    stripped = text.strip()
    if not stripped.startswith("(") or not stripped.endswith(")"):
        raise InvalidTupleError(f"'{text}' is not a tuple literal, expected something like (2,0,1)")

    inner = stripped[1:-1].strip()
    if inner == "":
        raise InvalidTupleError(f"'{text}' has no entries")

    entries = []
    for part in inner.split(","):
        part = part.strip()
        if not part.isdecimal():
            raise InvalidTupleError(f"'{text}' contains '{part}', which is not a nonnegative integer")
        entries.append(int(part))

    return tuple(entries)


def format_tuple(element: Iterable[int]) -> str:
    return "(" + ",".join(str(entry) for entry in element) + ")"


def validate_tuple(algebra: UnaryAlgebra, element: PowerTuple, length: Optional[int] = None) -> PowerTuple:
    """Checks that a tuple has the expected length and only carrier elements as entries."""
    element = tuple(element)

    if length is not None and len(element) != length:
        raise LengthMismatchError(f"{format_tuple(element)} has length {len(element)}, expected {length}")

    for entry in element:
        if not 0 <= entry < algebra.carrier_size:
            raise InvalidTupleError(f"{format_tuple(element)} has entry {entry}, "
                                    f"which is not in 0..{algebra.carrier_size - 1}")

    return element


def apply_pointwise(algebra: UnaryAlgebra, op_name: str, element: PowerTuple) -> PowerTuple:
    table = algebra.table(op_name)
    return tuple(table[entry] for entry in element)


def content(element: PowerTuple) -> FrozenSet[int]:
    """Returns the set of entries of a tuple."""
    return frozenset(element)


def tuple_format(element: PowerTuple) -> IndexPartition:
    """Returns the partition of positions into maximal sets holding equal entries."""
    return IndexPartition.from_labels(element)


def generate_subpower(algebra: UnaryAlgebra,
                      length: int,
                      generators: Iterable[PowerTuple],
                      cap: int = DEFAULT_ELEMENT_CAP) -> Subpower:
    """Returns the least subset of A^N containing the generators and closed under every operation.

    :param algebra: the algebra A
    :param length: the size N of the index set
    :param generators: the tuples to generate from, an empty collection yields the empty subpower
    :param cap: the largest number of elements the closure may have
    :return: the generated subpower
    """
    generators = sorted({validate_tuple(algebra, generator, length) for generator in generators})
    if len(generators) > cap:
        raise CapacityError("Subpower size", len(generators), cap, "cap-elements")

    tables = [algebra.ops[name] for name in algebra.sorted_op_names]

    seen = set(generators)
    queue = deque(generators)
    while queue:
        element = queue.popleft()
        for table in tables:
            image = tuple(table[entry] for entry in element)
            if image not in seen:
                if len(seen) >= cap:
                    raise CapacityError("Subpower size", len(seen) + 1, cap, "cap-elements")
                seen.add(image)
                queue.append(image)

    return Subpower(algebra, length, seen, generators)


def is_subdirect(subpower: Subpower) -> bool:
    """Returns whether every position of the subpower takes every value of the carrier."""
    if len(subpower) == 0:
        return False

    carrier_size = subpower.base.carrier_size
    return all(len(set(column)) == carrier_size for column in zip(*subpower.elements))


def full_diagonal(algebra: UnaryAlgebra, length: int) -> Subpower:
    """Returns D, the constant tuples of A^N."""
    elements = [(value,) * length for value in range(algebra.carrier_size)]
    return Subpower(algebra, length, elements, elements)


def diagonals(algebra: UnaryAlgebra,
              length: int,
              cap: int = DEFAULT_CARRIER_CAP) -> Tuple[Subpower, Subpower, FrozenSet[PowerTuple]]:
    """Returns the diagonal subsets D, D_0 and D_c of A^N.

    D_0 holds the constant tuples over values of constant maps in the monoid, it is closed.
    D_c holds the constant tuples over values of constant basic operations, it need not be closed
    and is therefore returned as a plain set.
    """
    diagonal = full_diagonal(algebra, length)

    zero_elements = [(value,) * length for value in sorted(monoid_constant_values(algebra, cap=cap))]
    zero_diagonal = Subpower(algebra, length, zero_elements, zero_elements)

    constant_diagonal = frozenset((value,) * length for value in constant_values(algebra))

    return diagonal, zero_diagonal, constant_diagonal


def induced_algebra(subpower: Subpower, name: Optional[str] = None) -> UnaryAlgebra:
    """Returns the subpower as an algebra of its own, numbering elements in lexicographic order.

    :raises EmptySubpowerError: if the subpower has no elements
    """
    if len(subpower) == 0:
        raise EmptySubpowerError("The empty subpower has no induced algebra")

    ops = {}
    for op_name, table in subpower.base.ops.items():
        ops[op_name] = tuple(subpower.index(tuple(table[entry] for entry in element))
                             for element in subpower.elements)

    return UnaryAlgebra(carrier_size=len(subpower),
                        ops=ops,
                        name=name or f"{subpower.base.display_name()}^{subpower.length}")


def _monogenic_code(algebra: UnaryAlgebra, values: Tuple[int, ...]) -> CanonicalCode:
    subpower = generate_subpower(algebra, len(values), [values])
    return canonical_form(induced_algebra(subpower))


def enumerate_monogenic_up_to_iso(algebra: UnaryAlgebra,
                                  length: int,
                                  cap: int = DEFAULT_ENUMERATION_CAP,
                                  threads: int = 1) -> List[CanonicalCode]:
    """Returns the sorted canonical codes of all monogenic subpowers of A^N.

    The isomorphism type of the subpower generated by x only depends on the content of x:
    keeping one position per format block embeds it into A^|content| without changing it.
    One generator per content set of size at most min(N, n) therefore covers every tuple of A^N.

    :param algebra: the algebra A
    :param length: the size N of the index set
    :param cap: the largest n^N that is accepted
    :param threads: the number of threads to compute codes with
    :return: the distinct codes, sorted
    """
    size = algebra.carrier_size ** length
    if size > cap:
        raise CapacityError("Monogenic census power size", size, cap, "cap-enumeration")

    contents = [values
                for count in range(1, min(length, algebra.carrier_size) + 1)
                for values in itertools.combinations(range(algebra.carrier_size), count)]

    codes = Parallel(n_jobs=threads, backend="threading")(
        delayed(_monogenic_code)(algebra, values) for values in contents)

    return sorted(set(codes))


def enumerate_closed_subsets(algebra: UnaryAlgebra,
                             length: int,
                             cap: int = DEFAULT_CLOSED_SUBSET_CAP,
                             enumeration_cap: int = DEFAULT_ENUMERATION_CAP) -> List[FrozenSet[PowerTuple]]:
    """Returns every subset of A^N closed under the operations, the empty set included.

    A union of closed subsets is closed, so every closed subset is a union of monogenic closures.

    :return: the closed subsets ordered by size and then by their sorted elements
    """
    size = algebra.carrier_size ** length
    if size > enumeration_cap:
        raise CapacityError("Closed subset search power size", size, enumeration_cap, "cap-enumeration")

    points = list(itertools.product(range(algebra.carrier_size), repeat=length))
    closures = {point: generate_subpower(algebra, length, [point]).as_set() for point in points}

    empty: FrozenSet[PowerTuple] = frozenset()
    found = {empty}
    frontier = [empty]
    while frontier:
        current = frontier.pop()
        for point in points:
            if point in current:
                continue

            extended = current | closures[point]
            if extended not in found:
                if len(found) >= cap:
                    raise CapacityError("Number of closed subsets", len(found) + 1, cap, "cap-enumeration")
                found.add(extended)
                frontier.append(extended)

    return sorted(found, key=lambda subset: (len(subset), sorted(subset)))
