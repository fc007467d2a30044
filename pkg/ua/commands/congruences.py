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
from ua.components.algebra.congruences import congruence_lattice
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
def congruences(algebra: Path) -> CommandResult:
    """List the congruences of an algebra, finest first."""
    parsed = container.algebra_codec().read(algebra)
    lattice = congruence_lattice(parsed, cap=container.cli_config_manager().congruence_cap())

    views = [f"{parsed.display_name()} has {len(lattice)} congruence{'' if len(lattice) == 1 else 's'}"]
    views.extend(str(congruence) for congruence in lattice)

    return CommandResult(data={"algebra": parsed.display_name(), "count": len(lattice), "congruences": lattice},
                         views=views)
