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
from typing import Optional, Tuple

import click

from ua.click import PathParameter, TupleParameter, UACommand
from ua.components.powers.powers import format_tuple, generate_subpower, is_subdirect
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.argument("generators", type=TupleParameter(), nargs=-1, required=True)
@click.option("--export",
              type=PathParameter(exists=False, file_okay=True, dir_okay=False),
              help="Write the subpower to this file in the subpower format")
def subpower(algebra: Path, generators: Tuple[Tuple[int, ...], ...], export: Optional[Path]) -> CommandResult:
    """Generate the subpower of A^N spanned by tuple literals like (2,0,1).

    All generators must have the same length N.
    """
    parsed = container.algebra_codec().read(algebra)
    length = len(generators[0])

    generated = generate_subpower(parsed,
                                  length,
                                  generators,
                                  cap=container.cli_config_manager().cap_elements.get_value())
    subdirect = is_subdirect(generated)

    views = [f"{len(generated)} elements, {'subdirect' if subdirect else 'not subdirect'}"]
    views.extend(("gen " if element in generated.generators else "") + format_tuple(element)
                 for element in generated.elements)

    if export is not None:
        container.subpower_codec().write(export, generated)
        views.append(f"Wrote the subpower to {export}")

    return CommandResult(data={"algebra": parsed.display_name(), "subpower": generated, "subdirect": subdirect},
                         views=views)
