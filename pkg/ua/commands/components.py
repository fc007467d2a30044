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

from pathlib import Path

import click

from ua.click import PathParameter, UACommand
from ua.components.graph.digraph import analyze_components, gamma
from ua.container import container
from ua.models.command import CommandResult


def _format_set(vertices) -> str:
    return "{" + ",".join(str(vertex) for vertex in vertices) + "}"


@click.command(cls=UACommand)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
def components(algebra: Path) -> CommandResult:
    """Show the connected and strongly connected components of an algebra's digraph.

    A top component is reached from no other strongly connected component,
    a bottom component is the unique strongly connected component a connected component ends in.
    """
    parsed = container.algebra_codec().read(algebra)
    analysis = analyze_components(gamma(parsed))

    views = [f"Connected components: {' '.join(_format_set(c) for c in analysis.connected_components)}",
             f"Strongly connected components: {' '.join(_format_set(s) for s in analysis.sccs)}"]

    covers = [(upper, lower) for upper, lower in analysis.scc_order
              if not any((upper, middle) in analysis.scc_order and (middle, lower) in analysis.scc_order
                         for middle in range(len(analysis.sccs)))]
    if len(covers) > 0:
        views.append("Order: " + ", ".join(f"{_format_set(analysis.sccs[upper])} > {_format_set(analysis.sccs[lower])}"
                                           for upper, lower in covers))

    views.append(f"Top components: {' '.join(_format_set(analysis.sccs[index]) for index in analysis.top_sccs)}")
    for component, bottom in zip(analysis.connected_components, analysis.bottom_scc_per_component):
        views.append(f"Bottom of {_format_set(component)}: "
                     f"{'none' if bottom is None else _format_set(analysis.sccs[bottom])}")

    return CommandResult(data={"algebra": parsed.display_name(), **analysis.dict()}, views=views)
