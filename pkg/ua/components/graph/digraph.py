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

from typing import Dict, List, Optional, Tuple

import networkx as nx

from ua.models.algebra import UnaryAlgebra
from ua.models.digraph import AlgebraDigraph, ComponentAnalysis, OuterSection
from ua.models.errors import NoBottomError, NotConnectedError, UnknownOpError


def gamma(algebra: UnaryAlgebra) -> AlgebraDigraph:
    """Returns the digraph of an algebra, edges ordered by source vertex and then by operation name."""
    names = algebra.sorted_op_names
    edges = [(vertex, algebra.ops[name][vertex], name) for vertex in range(algebra.carrier_size) for name in names]
    return AlgebraDigraph.construct(vertex_count=algebra.carrier_size, labeled_edges=edges)


def _sorted_components(components) -> List[List[int]]:
    return sorted((sorted(component) for component in components), key=lambda component: component[0])


def top_scc_count(graph: nx.DiGraph) -> int:
    """Returns the number of strongly connected components no other component reaches."""
    condensation = nx.condensation(graph)
    return sum(1 for node in condensation if condensation.in_degree(node) == 0)


def analyze_components(digraph: AlgebraDigraph) -> ComponentAnalysis:
    """Computes the connected components, the strongly connected components and their reachability order.

    Components are ordered by their least vertex. A connected component records a bottom only when exactly
    one of its strongly connected components reaches no other one.
    """
    graph = digraph.to_plain()

    connected_components = _sorted_components(nx.weakly_connected_components(graph))
    sccs = _sorted_components(nx.strongly_connected_components(graph))

    condensation = nx.condensation(graph, scc=[set(scc) for scc in sccs])
    mapping = condensation.graph["mapping"]

    scc_order = sorted((index, descendant)
                       for index in condensation
                       for descendant in nx.descendants(condensation, index))
    top_sccs = sorted(index for index in condensation if condensation.in_degree(index) == 0)

    bottoms = []
    for component in connected_components:
        indices = sorted({mapping[vertex] for vertex in component})
        sinks = [index for index in indices if condensation.out_degree(index) == 0]
        bottoms.append(sinks[0] if len(sinks) == 1 else None)

    return ComponentAnalysis(connected_components=connected_components,
                             sccs=sccs,
                             scc_order=scc_order,
                             top_sccs=top_sccs,
                             bottom_scc_per_component=bottoms)


def outer_sections(algebra: UnaryAlgebra) -> List[OuterSection]:
    """Returns the outer sections of a connected algebra, ordered by least vertex.

    :raises NotConnectedError: if the algebra has several connected components
    :raises NoBottomError: if the algebra has no unique minimal strongly connected component
    """
    digraph = gamma(algebra)
    analysis = analyze_components(digraph)

    if len(analysis.connected_components) > 1:
        raise NotConnectedError(f"Algebra '{algebra.display_name()}' has "
                                f"{len(analysis.connected_components)} connected components")

    bottom = analysis.bottom_scc_per_component[0]
    if bottom is None:
        raise NoBottomError(f"Algebra '{algebra.display_name()}' has no bottom component")

    bottom_vertices = set(analysis.sccs[bottom])
    remaining = digraph.to_plain().subgraph(v for v in range(algebra.carrier_size) if v not in bottom_vertices)

    sections = []
    for component in _sorted_components(nx.weakly_connected_components(remaining)):
        members = set(component)
        edges = [edge for edge in digraph.labeled_edges if edge[0] in members and edge[1] in members]
        sections.append(OuterSection(vertices=component, labeled_edges=edges))

    return sections


def predecessor_profile(digraph: AlgebraDigraph, op_name: str) -> Dict[int, int]:
    """Returns for every vertex the number of strict predecessors along edges of one operation.

    :raises UnknownOpError: if no edge carries the operation name and the digraph has vertices
    """
    if digraph.vertex_count > 0 and op_name not in digraph.op_names:
        raise UnknownOpError(op_name)

    counts = {vertex: 0 for vertex in range(digraph.vertex_count)}
    for source, target, name in digraph.labeled_edges:
        if name == op_name and source != target:
            counts[target] += 1
    return counts


def to_dot(digraph: AlgebraDigraph, name: Optional[str] = None) -> str:
    """Renders a digraph in the DOT language."""
    lines = [f"digraph \"{name or 'gamma'}\" {{"]
    lines.extend(f"  {vertex};" for vertex in range(digraph.vertex_count))
    lines.extend(f"  {source} -> {target} [label=\"{op}\"];" for source, target, op in digraph.labeled_edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_algebras(algebra: UnaryAlgebra) -> List[Tuple[List[int], UnaryAlgebra]]:
    """Returns the connected components of an algebra as subalgebras.

    Each subalgebra numbers its elements in increasing order of the vertices it was built from.
    """
    components = analyze_components(gamma(algebra)).connected_components

    result = []
    for index, vertices in enumerate(components):
        position = {vertex: local for local, vertex in enumerate(vertices)}
        ops = {name: tuple(position[table[vertex]] for vertex in vertices) for name, table in algebra.ops.items()}
        result.append((vertices, UnaryAlgebra(carrier_size=len(vertices),
                                              ops=ops,
                                              name=f"{algebra.display_name()}[{index}]")))
    return result


def top_component_count(algebra: UnaryAlgebra) -> int:
    """Returns the number of top components of an algebra."""
    return top_scc_count(gamma(algebra).to_plain())
