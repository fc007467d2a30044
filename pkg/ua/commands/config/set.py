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

from ua.click import UACommand
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand)
@click.argument("key", type=str)
@click.argument("value", type=str)
def set(key: str, value: str) -> CommandResult:
    """Set a configurable option.

    Run `ua config list` to show all available options.
    """
    option = container.cli_config_manager().get_option_by_key(key)

    try:
        option.set_value(value)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint="'VALUE'")

    return CommandResult(data={"key": key, "value": option.get_value()},
                         views=[f"Successfully updated the value of '{key}' to '{option.get_value()}'"])
