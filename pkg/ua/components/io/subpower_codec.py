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
from typing import List, Optional

from ua.components.powers.powers import format_tuple, parse_tuple, validate_tuple
from ua.models.algebra import UnaryAlgebra
from ua.models.errors import AlgebraFormatError, UnaryAlgebraError
from ua.models.powers import PowerTuple, Subpower


class SubpowerCodec:
    """The SubpowerCodec class reads and writes subpowers.

    The header 'subpower N=<N> base=<name>' is followed by one tuple literal per line,
    generators are prefixed with 'gen '.
    """

    def dumps(self, subpower: Subpower) -> str:
        generators = set(subpower.generators)
        lines = [f"subpower N={subpower.length} base={subpower.base.display_name()}"]
        for element in subpower.elements:
            prefix = "gen " if element in generators else ""
            lines.append(prefix + format_tuple(element))
        return "\n".join(lines) + "\n"

    def write(self, path: Path, subpower: Subpower) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(subpower), encoding="utf-8")

    def parse_text(self, text: str, base: UnaryAlgebra, source: Optional[str] = None) -> Subpower:
        """Parses a subpower document over a known base algebra.

        The elements are taken as given, closure is not checked.
        """
        length = None
        elements: List[PowerTuple] = []
        generators: List[PowerTuple] = []

        for number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if line == "":
                continue

            if length is None:
                tokens = line.split()
                if len(tokens) < 2 or tokens[0] != "subpower" or not tokens[1].startswith("N="):
                    raise AlgebraFormatError(number, "expected 'subpower N=<N> base=<name>'", source)
                if not tokens[1][2:].isdecimal():
                    raise AlgebraFormatError(number, f"'{tokens[1]}' does not hold a positive integer", source)
                length = int(tokens[1][2:])
                continue

            is_generator = line.startswith("gen ")
            literal = line[4:] if is_generator else line
            try:
                element = validate_tuple(base, parse_tuple(literal), length)
            except UnaryAlgebraError as error:
                raise AlgebraFormatError(number, str(error), source)

            elements.append(element)
            if is_generator:
                generators.append(element)

        if length is None:
            raise AlgebraFormatError(None, "missing subpower header", source)

        return Subpower(base, length, elements, generators)
