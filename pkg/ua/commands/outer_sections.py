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
from ua.components.graph.digraph import outer_sections as compute_outer_sections
from ua.components.graph.digraph import top_scc_count
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, name="outer-sections")
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
def outer_sections(algebra: Path) -> CommandResult:
    """List the outer sections of a connected algebra.

    Outer sections are the connected pieces left after removing the bottom component.
    """
    parsed = container.algebra_codec().read(algebra)
    sections = compute_outer_sections(parsed)

    data = []
    views = [f"{parsed.display_name()} has {len(sections)} outer section{'' if len(sections) == 1 else 's'}"]
    for section in sections:
        top_count = top_scc_count(section.to_plain())
        data.append({**section.dict(), "top_components": top_count})

        edges = ", ".join(f"{source}->{target} ({op})" for source, target, op in section.labeled_edges)
        views.append(f"{{{','.join(str(vertex) for vertex in section.vertices)}}}: "
                     f"{top_count} top component{'' if top_count == 1 else 's'}; edges: {edges or 'none'}")

    return CommandResult(data={"algebra": parsed.display_name(), "sections": data}, views=views)
