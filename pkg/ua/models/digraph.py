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

from typing import List, Optional, Set, Tuple

import networkx as nx

from ua.models.pydantic import WrappedBaseModel

# (source, target, op name)
LabeledEdge = Tuple[int, int, str]


class AlgebraDigraph(WrappedBaseModel):
    """The digraph of an algebra, with an edge a -> f(a) labeled f for every element a and operation f."""
    vertex_count: int
    labeled_edges: List[LabeledEdge]

    @property
    def op_names(self) -> Set[str]:
        return {name for _, _, name in self.labeled_edges}

    def to_plain(self) -> nx.DiGraph:
        """Returns the digraph with labels and parallel edges forgotten."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from((source, target) for source, target, _ in self.labeled_edges)
        return graph


class ComponentAnalysis(WrappedBaseModel):
    """The connected and strongly connected components of a digraph and the order between them.

    Strongly connected components are referred to by their index in sccs.
    scc_order holds (i, j) whenever component i reaches component j and i != j.
    """
    connected_components: List[List[int]]
    sccs: List[List[int]]
    scc_order: List[Tuple[int, int]]
    top_sccs: List[int]
    bottom_scc_per_component: List[Optional[int]]

    def scc_of(self, vertex: int) -> int:
        for index, scc in enumerate(self.sccs):
            if vertex in scc:
                return index
        raise ValueError(f"{vertex} is not a vertex")

    @property
    def top_count(self) -> int:
        return len(self.top_sccs)


class OuterSection(WrappedBaseModel):
    """A connected piece of a connected algebra's digraph after its bottom component is removed."""
    vertices: List[int]
    labeled_edges: List[LabeledEdge]

    def to_plain(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((source, target) for source, target, _ in self.labeled_edges)
        return graph
