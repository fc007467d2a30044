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
from typing import Optional

import click

from ua.click import PathParameter, UACommand
from ua.components.casebook.boolean_powers import boolean_power as build_boolean_power
from ua.components.casebook.boolean_powers import boolean_power_profile
from ua.components.powers.powers import is_subdirect
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, name="boolean-power", computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.option("--field",
              type=PathParameter(exists=True, file_okay=True, dir_okay=False),
              required=True,
              help="The field of sets, a 'ground <m>' line and 'members' lines of binary strings")
@click.option("--profile", is_flag=True, default=False, help="Describe the digraph by strict predecessor counts")
@click.option("--export",
              type=PathParameter(exists=False, file_okay=True, dir_okay=False),
              help="Write the boolean power to this file in the subpower format")
def boolean_power(algebra: Path, field: Path, profile: bool, export: Optional[Path]) -> CommandResult:
    """Build the boolean power of an algebra over a finite field of sets.

    It holds the tuples every format block of which is a member of the field.
    """
    parsed = container.algebra_codec().read(algebra)
    field_of_sets = container.field_codec().read(field)
    cap = container.cli_config_manager().cap_enumeration.get_value()

    power = build_boolean_power(parsed, field_of_sets, cap=cap)
    subdirect = is_subdirect(power)

    data = {"algebra": parsed.display_name(), "ground_size": field_of_sets.ground_size,
            "size": len(power), "subdirect": subdirect}
    views = [f"Boolean power of {parsed.display_name()} over {len(field_of_sets.members)} sets: "
             f"{len(power)} elements, {'subdirect' if subdirect else 'not subdirect'}"]

    if profile:
        description = boolean_power_profile(parsed, field_of_sets, cap=cap)
        data["profile"] = description
        views.append(f"Sink {description.sink} has {description.sink_predecessors} strict predecessors")
        views.extend(f"  {element}: {count}" for element, count in description.predecessor_counts.items())
        views.append("Predecessor counts: " + ", ".join(f"{count} x{times}"
                                                        for count, times in description.count_multiset.items()))

    if export is not None:
        container.subpower_codec().write(export, power)
        views.append(f"Wrote the boolean power to {export}")

    return CommandResult(data=data, views=views)
