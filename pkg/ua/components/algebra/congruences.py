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

from typing import List, Optional

from ua.constants import DEFAULT_CONGRUENCE_CAP
from ua.components.util.union_find import UnionFind
from ua.models.algebra import Congruence, UnaryAlgebra
from ua.models.errors import CapacityError


def _check_cap(algebra: UnaryAlgebra, cap: int) -> None:
    if algebra.carrier_size > cap:
        raise CapacityError("Congruence enumeration carrier size", algebra.carrier_size, cap, "cap-congruence")


def principal_congruence(algebra: UnaryAlgebra, first: int, second: int) -> Congruence:
    """Returns the least congruence identifying two carrier elements.

    Pairs are merged in a union-find structure and their images under every operation are queued in turn,
    a pair whose elements are already related needs no propagation.
    """
    union_find = UnionFind(algebra.carrier_size)
    tables = list(algebra.ops.values())

    pending = [(first, second)]
    while pending:
        left, right = pending.pop()
        if union_find.union(left, right):
            pending.extend((table[left], table[right]) for table in tables)

    return Congruence.construct(size=algebra.carrier_size,
                                blocks=tuple(tuple(group) for group in union_find.groups()))


def _principal_congruences(algebra: UnaryAlgebra) -> List[Congruence]:
    principals = []
    seen = set()
    for first in range(algebra.carrier_size):
        for second in range(first + 1, algebra.carrier_size):
            congruence = principal_congruence(algebra, first, second)
            if congruence not in seen:
                seen.add(congruence)
                principals.append(congruence)
    return principals


def congruence_lattice(algebra: UnaryAlgebra, cap: int = DEFAULT_CONGRUENCE_CAP) -> List[Congruence]:
    """Returns every congruence of an algebra.

    Every congruence is a join of principal congruences, so the lattice is the closure of the identity
    and the principal congruences under joins.

    :param algebra: the algebra to compute the congruences of
    :param cap: the largest carrier size that is accepted
    :return: the congruences, finest first
    """
    _check_cap(algebra, cap)

    principals = _principal_congruences(algebra)
    identity = Congruence.discrete(algebra.carrier_size)

    lattice = {identity}
    frontier = [identity]
    while frontier:
        congruence = frontier.pop()
        for principal in principals:
            joined = congruence.join(principal)
            if joined not in lattice:
                lattice.add(joined)
                frontier.append(joined)

    return sorted(lattice, key=lambda congruence: (-congruence.class_count, congruence.blocks))


def monolith(algebra: UnaryAlgebra, cap: int = DEFAULT_CONGRUENCE_CAP) -> Optional[Congruence]:
    """Returns the meet of all non-identity congruences if it is not the identity itself, None otherwise.

    Every non-identity congruence contains a principal one, so it suffices to meet the principal congruences.
    """
    _check_cap(algebra, cap)

    principals = _principal_congruences(algebra)
    if len(principals) == 0:
        return None

    meet = principals[0]
    for principal in principals[1:]:
        meet = meet.meet(principal)

    if meet.is_discrete():
        return None
    return meet


def is_subdirectly_irreducible(algebra: UnaryAlgebra, cap: int = DEFAULT_CONGRUENCE_CAP) -> bool:
    """Returns whether the non-identity congruences have a unique minimal element.

    One-element algebras are not subdirectly irreducible.
    """
    return monolith(algebra, cap=cap) is not None
