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

from typing import Tuple

import click

from ua.click import TupleParameter, UACommand
from ua.components.casebook.casebook import transposition_distance as compute_distance
from ua.models.command import CommandResult


@click.command(cls=UACommand, name="transposition-distance")
@click.option("--carrier", "-m", type=click.IntRange(min=1), required=True, help="The carrier size m")
@click.argument("source", type=TupleParameter())
@click.argument("target", type=TupleParameter())
def transposition_distance(carrier: int, source: Tuple[int, ...], target: Tuple[int, ...]) -> CommandResult:
    """Count the pointwise transpositions needed to turn one tuple into another.

    Tuples with different formats cannot be reached and are reported as unreachable.
    """
    distance = compute_distance(carrier, source, target)
    return CommandResult(data={"carrier": carrier, "source": list(source), "target": list(target),
                               "distance": distance},
                         views=["unreachable" if distance is None else str(distance)])
