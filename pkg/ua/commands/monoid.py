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
from rich import box
from rich.table import Table

from ua.click import PathParameter, UACommand
from ua.components.algebra.algebra_core import generate_monoid, min_image_nonconstant, op_kind
from ua.container import container
from ua.models.command import CommandResult


@click.command(cls=UACommand, computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.option("--fmin", is_flag=True, default=False, help="Also report the non-constant element with smallest image")
def monoid(algebra: Path, fmin: bool) -> CommandResult:
    """List the transformation monoid generated by the operations of an algebra.

    Every element is shown with the shortest word producing it, the first name in a word is applied first.
    """
    parsed = container.algebra_codec().read(algebra)
    cap = container.cli_config_manager().cap_carrier.get_value()

    generated = generate_monoid(parsed, cap=cap)

    table = Table(box=box.SQUARE)
    table.add_column("#", justify="right")
    table.add_column("Word")
    table.add_column("Table")
    table.add_column("Image", justify="right")
    table.add_column("Kind")

    elements = []
    for index, (element, word) in enumerate(zip(generated.elements, generated.words)):
        kind = op_kind(element).value
        table.add_row(str(index), " ".join(word) or "id", " ".join(str(value) for value in element),
                      str(len(set(element))), kind)
        elements.append({"word": list(word), "table": list(element), "image_size": len(set(element)), "kind": kind})

    data = {"algebra": parsed.display_name(), "size": generated.size, "elements": elements}
    views = [f"Monoid of {parsed.display_name()} has {generated.size} elements", table]

    if fmin:
        f_min = min_image_nonconstant(parsed, cap=cap)
        data["f_min"] = {"table": list(f_min), "word": list(generated.word_of(f_min))}
        views.append(f"f_min = {' '.join(str(value) for value in f_min)} "
                     f"(word: {' '.join(generated.word_of(f_min)) or 'id'}, image size {len(set(f_min))})")

    return CommandResult(data=data, views=views)
