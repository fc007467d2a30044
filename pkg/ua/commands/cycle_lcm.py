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
from ua.components.casebook.casebook import cycle_length_sequence, tuple_cycle_length
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, name="cycle-lcm")
@click.argument("lengths", type=click.IntRange(min=1), nargs=-1)
@click.option("--algebra",
              type=PathParameter(exists=True, file_okay=True, dir_okay=False),
              help="Read the cycle lengths of a tuple from a bijective operation of this algebra")
@click.option("--op", type=str, default="f", show_default=True, help="The operation whose cycles are used")
@click.option("--tuple", "element", type=TupleParameter(), help="The tuple whose cycle lengths are used")
def cycle_lcm(lengths: Tuple[int, ...],
              algebra: Optional[Path],
              op: str,
              element: Optional[Tuple[int, ...]]) -> CommandResult:
    """Compute after how many steps a bijection returns a tuple to itself.

    This is the least common multiple of the lengths of the cycles through its entries,
    given directly or read from --algebra and --tuple.
    """
    if algebra is not None:
        if element is None:
            raise click.UsageError("--tuple is required when --algebra is given")
        lengths = tuple(cycle_length_sequence(container.algebra_codec().read(algebra), op, element))

    result = tuple_cycle_length(lengths)
    return CommandResult(data={"lengths": list(lengths), "lcm": result},
                         views=[f"Cycle lengths: {' '.join(str(length) for length in lengths)}", str(result)])
