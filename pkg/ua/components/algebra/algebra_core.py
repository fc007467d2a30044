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

from typing import Iterable, List, Sequence, Set

from ua.constants import DEFAULT_CARRIER_CAP
from ua.components.util.union_find import UnionFind
from ua.models.algebra import AlgebraType, OpKind, Table, TransformationMonoid, TypeVerdict, UnaryAlgebra
from ua.models.errors import CapacityError, InvalidAlgebraError, NotUncountableError


def op_kind(table: Sequence[int]) -> OpKind:
    """Returns whether an operation table is a bijection, a constant map or neither.

    The only map on a one-element carrier is reported as a bijection.
    """
    distinct = len(set(table))
    if distinct == len(table):
        return OpKind.Bijection
    if distinct == 1:
        return OpKind.Constant
    return OpKind.Other


def classify_type(algebra: UnaryAlgebra) -> TypeVerdict:
    """Classifies an algebra as being of countable or uncountable type.

    An algebra is of uncountable type exactly when one of its basic operations is neither a bijection nor constant.

    :param algebra: the algebra to classify
    :return: the verdict, with the first offending operation as witness or with the bijection/constant split
    """
    bijections = []
    constants = []

    for name in algebra.op_names:
        kind = op_kind(algebra.ops[name])
        if kind == OpKind.Other:
            return TypeVerdict(verdict=AlgebraType.Uncountable, witness=name)
        if kind == OpKind.Bijection:
            bijections.append(name)
        else:
            constants.append(name)

    return TypeVerdict(verdict=AlgebraType.Countable, bijections=bijections, constants=constants)


def compose(first: Sequence[int], second: Sequence[int]) -> Table:
    """Returns the table of x -> second(first(x))."""
    return tuple(second[element] for element in first)


def evaluate_word(algebra: UnaryAlgebra, word: Iterable[str]) -> Table:
    """Evaluates a word of operation names, applying the first name first."""
    table = algebra.identity
    for name in word:
        table = compose(table, algebra.table(name))
    return table


def generate_monoid(algebra: UnaryAlgebra, cap: int = DEFAULT_CARRIER_CAP) -> TransformationMonoid:
    """Generates the transformation monoid of an algebra breadth-first from the identity.

    Operations are tried in sorted name order, so every element is found first through its shortlex-least word.

    :param algebra: the algebra to generate the monoid of
    :param cap: the largest carrier size that is accepted
    :return: the monoid, ordered by word length and then lexicographically by word
    """
    if algebra.carrier_size > cap:
        raise CapacityError("Monoid generation carrier size", algebra.carrier_size, cap, "cap-carrier")

    tables = [(name, algebra.ops[name]) for name in algebra.sorted_op_names]

    elements = [algebra.identity]
    words = [()]
    seen = {algebra.identity}

    # The element list doubles as the breadth-first queue
    index = 0
    while index < len(elements):
        element, word = elements[index], words[index]
        index += 1

        for name, table in tables:
            image = compose(element, table)
            if image not in seen:
                seen.add(image)
                elements.append(image)
                words.append(word + (name,))

    return TransformationMonoid.construct(elements=elements, words=words)


def min_image_nonconstant(algebra: UnaryAlgebra, cap: int = DEFAULT_CARRIER_CAP) -> Table:
    """Returns f_min, a non-constant element of the monoid with the smallest image.

    Ties are broken by the order of the monoid.

    :raises NotUncountableError: if the algebra is of countable type
    """
    if classify_type(algebra).verdict != AlgebraType.Uncountable:
        raise NotUncountableError(algebra.name)

    best = None
    best_size = None
    for table in generate_monoid(algebra, cap=cap).elements:
        size = len(set(table))
        if size > 1 and (best_size is None or size < best_size):
            best, best_size = table, size

    return best


def constant_values(algebra: UnaryAlgebra) -> Set[int]:
    """Returns the values of the constant basic operations."""
    return {table[0] for table in algebra.ops.values() if len(set(table)) == 1}


def monoid_constant_values(algebra: UnaryAlgebra, cap: int = DEFAULT_CARRIER_CAP) -> Set[int]:
    """Returns the values of the constant maps in the monoid of the algebra."""
    return {table[0] for table in generate_monoid(algebra, cap=cap).elements if len(set(table)) == 1}


def bijection_reduct(algebra: UnaryAlgebra) -> UnaryAlgebra:
    """Returns the reduct keeping only the bijective basic operations."""
    return UnaryAlgebra(carrier_size=algebra.carrier_size,
                        ops={name: table for name, table in algebra.ops.items()
                             if op_kind(table) == OpKind.Bijection},
                        name=f"{algebra.display_name()}-bijections")


def relabel(algebra: UnaryAlgebra, permutation: Sequence[int]) -> UnaryAlgebra:
    """Returns the isomorphic copy in which carrier element a is renamed permutation[a]."""
    if sorted(permutation) != list(range(algebra.carrier_size)):
        raise InvalidAlgebraError(f"{list(permutation)} is not a permutation of 0..{algebra.carrier_size - 1}")

    ops = {}
    for name, table in algebra.ops.items():
        relabeled = [0] * algebra.carrier_size
        for element, image in enumerate(table):
            relabeled[permutation[element]] = permutation[image]
        ops[name] = tuple(relabeled)

    return UnaryAlgebra(carrier_size=algebra.carrier_size, ops=ops, name=algebra.name)


def subalgebra_closure(algebra: UnaryAlgebra, subset: Iterable[int]) -> List[int]:
    """Returns the least superset of subset closed under every basic operation, sorted."""
    closure = set(subset)
    stack = list(closure)
    while stack:
        element = stack.pop()
        for table in algebra.ops.values():
            image = table[element]
            if image not in closure:
                closure.add(image)
                stack.append(image)
    return sorted(closure)


def is_connected(algebra: UnaryAlgebra) -> bool:
    """Returns whether the underlying undirected graph of the algebra is connected."""
    union_find = UnionFind(algebra.carrier_size)
    for table in algebra.ops.values():
        for element, image in enumerate(table):
            union_find.union(element, image)
    return len(union_find.groups()) == 1
