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

from ua.constants import DEFAULT_ENUMERATION_CAP
from ua.components.casebook.casebook import chain_algebra
from ua.components.graph.digraph import gamma, predecessor_profile
from ua.components.iso.isomorphism import canonical_form
from ua.components.powers.powers import format_tuple, induced_algebra
from ua.models.algebra import UnaryAlgebra
from ua.models.casebook import BooleanPowerProfile, FieldOfSets, counts_to_multiset
from ua.models.errors import CapacityError, NotChainAlgebraError
from ua.models.powers import Subpower


def boolean_power(algebra: UnaryAlgebra, field: FieldOfSets, cap: int = DEFAULT_ENUMERATION_CAP) -> Subpower:
    """Returns the tuples of A^X every format block of which is a member of the field of sets.

    Every element is its own generator.

    :raises CapacityError: if n^|X| exceeds the enumeration cap
    """
    size = algebra.carrier_size ** field.ground_size
    if size > cap:
        raise CapacityError("Boolean power enumeration size", size, cap, "cap-enumeration")

    members = set(field.members)
    elements = []
    for element in itertools.product(range(algebra.carrier_size), repeat=field.ground_size):
        blocks = {}
        for position, entry in enumerate(element):
            blocks[entry] = blocks.get(entry, 0) | 1 << position
        if all(block in members for block in blocks.values()):
            elements.append(element)

    return Subpower(algebra, field.ground_size, elements, elements)


def boolean_power_profile(algebra: UnaryAlgebra,
                          field: FieldOfSets,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> BooleanPowerProfile:
    """Describes the digraph of a boolean power of the chain algebra by strict predecessor counts.

    :raises NotChainAlgebraError: if the algebra is not isomorphic to the chain algebra
    """
    if len(algebra.ops) != 1:
        raise NotChainAlgebraError("The algebra must have exactly one operation")

    op_name = algebra.op_names[0]
    chain = chain_algebra()
    renamed = UnaryAlgebra(carrier_size=chain.carrier_size, ops={op_name: chain.ops["f"]})
    if algebra.carrier_size != chain.carrier_size or canonical_form(algebra) != canonical_form(renamed):
        raise NotChainAlgebraError(f"Algebra '{algebra.display_name()}' is not isomorphic to the chain algebra")

    table = algebra.ops[op_name]
    fixed_point = next(element for element in range(algebra.carrier_size) if table[element] == element)

    power = boolean_power(algebra, field, cap=cap)
    digraph = gamma(induced_algebra(power))
    counts = predecessor_profile(digraph, op_name)

    sink = (fixed_point,) * field.ground_size
    sink_index = power.index(sink)
    predecessors = [source for source, target, _ in digraph.labeled_edges if target == sink_index and source != target]

    return BooleanPowerProfile(sink=sink,
                               sink_predecessors=counts[sink_index],
                               predecessor_counts={format_tuple(power.elements[index]): counts[index]
                                                   for index in predecessors},
                               count_multiset=counts_to_multiset([counts[index] for index in predecessors]))
