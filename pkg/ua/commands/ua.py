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

from ua import __version__
from ua.components.util.click_aliased_command_group import AliasedCommandGroup


@click.group(cls=AliasedCommandGroup)
@click.version_option(__version__)
def ua() -> None:
    """Classify finite unary algebras and build their subdirect powers."""
    # This method is intentionally empty
    # It is used as the command group for all `ua <command>` commands
    pass
