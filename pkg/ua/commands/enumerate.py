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
from ua.components.powers.powers import enumerate_monogenic_up_to_iso
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.option("--exponent", "-N", type=click.IntRange(min=1), required=True, help="The size N of the index set")
def enumerate(algebra: Path, exponent: int) -> CommandResult:
    """Count the monogenic subpowers of A^N up to isomorphism.

    Each isomorphism type is listed by its canonical code.
    """
    parsed = container.algebra_codec().read(algebra)
    config = container.cli_config_manager()

    codes = enumerate_monogenic_up_to_iso(parsed,
                                          exponent,
                                          cap=config.cap_enumeration.get_value(),
                                          threads=config.threads.get_value())

    views = [f"{len(codes)} monogenic subpower{'' if len(codes) == 1 else 's'} of "
             f"{parsed.display_name()}^{exponent} up to isomorphism"]
    views.extend(code.hex for code in codes)

    return CommandResult(data={"algebra": parsed.display_name(), "exponent": exponent, "count": len(codes),
                               "codes": codes},
                         views=views)
