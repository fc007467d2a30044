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

import click
from rich import box
from rich.table import Table

from ua.click import UACommand
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand)
def list() -> CommandResult:
    """List the configurable options and their current values."""
    table = Table(box=box.SQUARE)
    table.add_column("Key", overflow="fold")
    table.add_column("Value", overflow="fold")
    table.add_column("Location", overflow="fold")
    table.add_column("Description", overflow="fold")

    options = []
    for option in container.cli_config_manager().all_options:
        stored = option.get_stored_value()
        table.add_row(option.key,
                      "<not set>" if stored is None else str(stored),
                      str(option.location),
                      option.description)
        options.append({"key": option.key, "stored": stored, "value": option.get_value()})

    return CommandResult(data={"options": options}, views=[table])
