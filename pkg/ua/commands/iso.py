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
from ua.components.iso.isomorphism import are_isomorphic
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand)
@click.argument("first", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.argument("second", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
def iso(first: Path, second: Path) -> CommandResult:
    """Decide whether two algebras with the same operation names are isomorphic.

    Exits with code 1 when they are not.
    """
    codec = container.algebra_codec()
    first_algebra, second_algebra = codec.read(first), codec.read(second)

    bijection = are_isomorphic(first_algebra, second_algebra)

    if bijection is None:
        return CommandResult(exit_code=1,
                             data={"isomorphic": False, "bijection": None},
                             views=["not isomorphic"])

    mapping = ", ".join(f"{element}->{image}" for element, image in enumerate(bijection))
    return CommandResult(data={"isomorphic": True, "bijection": bijection},
                         views=["isomorphic", mapping])
