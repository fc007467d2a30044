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
from ua.components.graph.digraph import gamma as build_gamma
from ua.components.graph.digraph import to_dot
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
def gamma(algebra: Path) -> CommandResult:
    """Print the digraph of an algebra in the DOT language."""
    parsed = container.algebra_codec().read(algebra)
    dot = to_dot(build_gamma(parsed), parsed.display_name())
    return CommandResult(data={"algebra": parsed.display_name(), "dot": dot}, views=[dot.rstrip("\n")])
