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

import time
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ua.components.graph.digraph import (analyze_components, component_algebras, gamma, outer_sections,
                                         top_scc_count)
from ua.components.util.union_find import UnionFind
from ua.models.algebra import UnaryAlgebra
from ua.models.digraph import AlgebraDigraph, OuterSection
from ua.models.errors import NoBottomError, OpSignatureMismatchError, SearchTimeoutError
from ua.models.iso import CanonicalCode

Cells = List[List[int]]
Labeling = List[int]


class _CanonicalSearch:
    """Individualization-refinement search for the least relabeled table tuple of an algebra.

    Leaves of the search tree are discrete ordered partitions of the carrier, each read as a relabeling.
    Whenever two leaves give the same tables their labelings differ by an automorphism,
    which is used to skip children of a node that lie in an already explored orbit.
    """

    def __init__(self, algebra: UnaryAlgebra, deadline: Optional[float]) -> None:
        self._size = algebra.carrier_size
        self._tables = [algebra.ops[name] for name in algebra.sorted_op_names]
        self._preimages = []
        for table in self._tables:
            preimages = [[] for _ in range(self._size)]
            for element, image in enumerate(table):
                preimages[image].append(element)
            self._preimages.append(preimages)

        self._deadline = deadline
        self._first: Optional[Tuple[tuple, Labeling]] = None
        self._best: Optional[Tuple[tuple, Labeling]] = None
        self._automorphisms: List[List[int]] = []

    def run(self) -> Tuple[tuple, Labeling]:
        self._search(self._refine([list(range(self._size))]), [])
        return self._best

    def _refine(self, cells: Cells) -> Cells:
        """Splits cells until all elements of a cell see the same cells through every operation."""
        while True:
            cell_of = [0] * self._size
            for index, cell in enumerate(cells):
                for element in cell:
                    cell_of[element] = index

            refined = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue

                groups: Dict[tuple, List[int]] = {}
                for element in cell:
                    signature = tuple((cell_of[table[element]],
                                       tuple(sorted(cell_of[source] for source in preimages[element])))
                                      for table, preimages in zip(self._tables, self._preimages))
                    groups.setdefault(signature, []).append(element)

                refined.extend(groups[signature] for signature in sorted(groups))

            if len(refined) == len(cells):
                return refined
            cells = refined

    def _search(self, cells: Cells, path: List[int]) -> None:
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise SearchTimeoutError("The isomorphism search ran past its deadline")

        target_index = next((index for index, cell in enumerate(cells) if len(cell) > 1), None)
        if target_index is None:
            self._leaf(cells)
            return

        target = cells[target_index]
        explored = []
        for element in sorted(target):
            if len(explored) > 0 and self._in_explored_orbit(element, explored, path):
                continue

            remainder = [other for other in target if other != element]
            child = cells[:target_index] + [[element], remainder] + cells[target_index + 1:]
            self._search(self._refine(child), path + [element])
            explored.append(element)

    def _in_explored_orbit(self, element: int, explored: List[int], path: List[int]) -> bool:
        union_find = UnionFind(self._size)
        for automorphism in self._automorphisms:
            if all(automorphism[fixed] == fixed for fixed in path):
                for vertex, image in enumerate(automorphism):
                    union_find.union(vertex, image)

        root = union_find.find(element)
        return any(union_find.find(other) == root for other in explored)

    def _leaf(self, cells: Cells) -> None:
        order = [cell[0] for cell in cells]
        labeling = [0] * self._size
        for position, element in enumerate(order):
            labeling[element] = position

        key = tuple(tuple(labeling[table[element]] for element in order) for table in self._tables)

        for reference in (self._first, self._best):
            if reference is not None and reference[0] == key:
                reference_order = [0] * self._size
                for element, position in enumerate(reference[1]):
                    reference_order[position] = element
                self._automorphisms.append([reference_order[labeling[element]] for element in range(self._size)])

        if self._first is None:
            self._first = (key, labeling)
        if self._best is None or key < self._best[0]:
            self._best = (key, labeling)


def _encode(carrier_size: int, op_names: Sequence[str], key: tuple) -> CanonicalCode:
    data = bytearray()
    data += carrier_size.to_bytes(4, "big")
    data += len(op_names).to_bytes(4, "big")
    for name in op_names:
        raw = name.encode("ascii")
        data += len(raw).to_bytes(2, "big")
        data += raw
    for row in key:
        for value in row:
            data += value.to_bytes(4, "big")
    return CanonicalCode(data=bytes(data))


def canonical_labeling(algebra: UnaryAlgebra, deadline: Optional[float] = None) -> Tuple[CanonicalCode, Labeling]:
    """Returns the canonical code of an algebra and the relabeling realizing it.

    labeling[a] is the canonical number of carrier element a.

    :param algebra: the algebra to canonize
    :param deadline: a time.monotonic() value after which the search gives up
    :raises SearchTimeoutError: if the deadline passes during the search
    """
    key, labeling = _CanonicalSearch(algebra, deadline).run()
    return _encode(algebra.carrier_size, algebra.sorted_op_names, key), labeling


def canonical_form(algebra: UnaryAlgebra, deadline: Optional[float] = None) -> CanonicalCode:
    """Returns a code which two algebras with the same operation names share exactly when they are isomorphic."""
    return canonical_labeling(algebra, deadline)[0]


def _section_hashes(algebra: UnaryAlgebra) -> List[str]:
    try:
        sections = outer_sections(algebra)
    except NoBottomError:
        return []
    return sorted(nx.weisfeiler_lehman_graph_hash(section.to_plain()) for section in sections)


def invariant_signature(algebra: UnaryAlgebra) -> tuple:
    """Returns isomorphism invariants of an algebra.

    The signature lists the component sizes, the sizes of the strongly connected components,
    the number of top components and per component the hashes of its outer sections.
    """
    analysis = analyze_components(gamma(algebra))
    components = sorted((len(vertices), _section_hashes(component))
                        for vertices, component in component_algebras(algebra))
    return (tuple(sorted(len(component) for component in analysis.connected_components)),
            tuple(sorted(len(scc) for scc in analysis.sccs)),
            analysis.top_count,
            tuple((size, tuple(hashes)) for size, hashes in components))


def is_isomorphism(first: UnaryAlgebra, second: UnaryAlgebra, bijection: Sequence[int]) -> bool:
    """Returns whether a map commutes with every operation and is a bijection between the carriers."""
    if sorted(bijection) != list(range(second.carrier_size)) or len(bijection) != first.carrier_size:
        return False
    return all(bijection[table[element]] == second.ops[name][bijection[element]]
               for name, table in first.ops.items()
               for element in range(first.carrier_size))


def are_isomorphic(first: UnaryAlgebra,
                   second: UnaryAlgebra,
                   deadline: Optional[float] = None) -> Optional[List[int]]:
    """Searches an isomorphism between two algebras with the same operation names.

    Connected components are matched by their canonical codes; composing the canonical labelings
    of matched components gives the isomorphism.

    :param first: the first algebra
    :param second: the second algebra
    :param deadline: a time.monotonic() value after which the search gives up
    :return: the isomorphism as a list mapping elements of first to elements of second, None if none exists
    :raises OpSignatureMismatchError: if the operation names differ
    :raises SearchTimeoutError: if the deadline passes during the search
    """
    if set(first.op_names) != set(second.op_names):
        raise OpSignatureMismatchError(f"Operation names differ: {sorted(first.op_names)} "
                                       f"vs {sorted(second.op_names)}")

    if first.carrier_size != second.carrier_size:
        return None
    if invariant_signature(first) != invariant_signature(second):
        return None

    available: Dict[CanonicalCode, List[Tuple[List[int], Labeling]]] = {}
    for vertices, component in component_algebras(second):
        code, labeling = canonical_labeling(component, deadline)
        available.setdefault(code, []).append((vertices, labeling))

    bijection = [0] * first.carrier_size
    for vertices, component in component_algebras(first):
        code, labeling = canonical_labeling(component, deadline)
        candidates = available.get(code)
        if not candidates:
            return None

        target_vertices, target_labeling = candidates.pop(0)
        target_by_position = {position: local for local, position in enumerate(target_labeling)}
        for local, vertex in enumerate(vertices):
            bijection[vertex] = target_vertices[target_by_position[labeling[local]]]

    if not is_isomorphism(first, second, bijection):
        raise RuntimeError("Composed canonical labelings do not form an isomorphism")

    return bijection


def digraph_isomorphic(first: Union[AlgebraDigraph, OuterSection, nx.DiGraph],
                       second: Union[AlgebraDigraph, OuterSection, nx.DiGraph]) -> bool:
    """Returns whether two digraphs are isomorphic when labels and parallel edges are ignored."""
    first_graph = first if isinstance(first, nx.DiGraph) else first.to_plain()
    second_graph = second if isinstance(second, nx.DiGraph) else second.to_plain()
    return nx.is_isomorphic(first_graph, second_graph)


def section_top_counts(algebra: UnaryAlgebra) -> List[int]:
    """Returns the sorted top component counts of the outer sections of every connected component.

    Components without a bottom contribute their own top count.
    """
    counts = []
    for _, component in component_algebras(algebra):
        try:
            counts.extend(top_scc_count(section.to_plain()) for section in outer_sections(component))
        except NoBottomError:
            counts.append(top_scc_count(gamma(component).to_plain()))
    return sorted(counts)
