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

import json
from pathlib import Path
from typing import Dict, Optional

import json5

from ua.models.algebra import UnaryAlgebra
from ua.models.errors import AlgebraFormatError, InvalidAlgebraError


class AlgebraCodec:
    """The AlgebraCodec class reads and writes unary algebras.

    The line format looks like this, '#' starts a comment:

        algebra chain
        carrier 3
        op f 0 0 1

    Files ending in .json or .json5 hold {"name": ..., "carrier": n, "ops": {"f": [...]}} instead.
    """

    def read(self, path: Path) -> UnaryAlgebra:
        """Reads an algebra file, falling back to the file's stem when the algebra has no name.

        :param path: the path to the file to read
        :return: the parsed algebra
        """
        text = path.read_text(encoding="utf-8")

        if path.suffix in [".json", ".json5"]:
            algebra = self.parse_json(text, source=str(path))
        else:
            algebra = self.parse_text(text, source=str(path))

        if algebra.name is None:
            algebra = algebra.copy(update={"name": path.stem})

        return algebra

    def parse_text(self, text: str, source: Optional[str] = None) -> UnaryAlgebra:
        """Parses the line format.

        :param text: the contents of the document
        :param source: the name of the document, used in error messages
        :return: the parsed algebra
        """
        name = None
        carrier_size = None
        ops: Dict[str, tuple] = {}

        for number, raw_line in enumerate(text.splitlines(), start=1):
            tokens = raw_line.split("#", 1)[0].split()
            if len(tokens) == 0:
                continue

            keyword, arguments = tokens[0], tokens[1:]

            if keyword == "algebra":
                if name is not None:
                    raise AlgebraFormatError(number, "duplicate algebra line", source)
                if len(arguments) != 1:
                    raise AlgebraFormatError(number, "expected 'algebra <name>'", source)
                name = arguments[0]
            elif keyword == "carrier":
                if carrier_size is not None:
                    raise AlgebraFormatError(number, "duplicate carrier line", source)
                if len(arguments) != 1 or not arguments[0].isdecimal() or int(arguments[0]) < 1:
                    raise AlgebraFormatError(number, "expected 'carrier <n>' with a positive integer n", source)
                carrier_size = int(arguments[0])
            elif keyword == "op":
                if carrier_size is None:
                    raise AlgebraFormatError(number, "op line before the carrier line", source)
                if len(arguments) == 0:
                    raise AlgebraFormatError(number, "expected 'op <name> <values>'", source)

                op_name, values = arguments[0], arguments[1:]
                if op_name in ops:
                    raise AlgebraFormatError(number, f"duplicate operation '{op_name}'", source)
                if not all(value.isdecimal() for value in values):
                    raise AlgebraFormatError(number, f"values of '{op_name}' must be nonnegative integers", source)
                if len(values) != carrier_size:
                    raise AlgebraFormatError(number,
                                             f"operation '{op_name}' has {len(values)} values, "
                                             f"expected {carrier_size}",
                                             source)

                table = tuple(int(value) for value in values)
                outside = next((value for value in table if value >= carrier_size), None)
                if outside is not None:
                    raise AlgebraFormatError(number,
                                             f"value {outside} of '{op_name}' is not in 0..{carrier_size - 1}",
                                             source)

                ops[op_name] = table
            else:
                raise AlgebraFormatError(number, f"unknown keyword '{keyword}'", source)

        if carrier_size is None:
            raise AlgebraFormatError(None, "missing carrier line", source)

        try:
            return UnaryAlgebra(carrier_size=carrier_size, ops=ops, name=name)
        except InvalidAlgebraError as error:
            raise AlgebraFormatError(None, str(error), source)

    def parse_json(self, text: str, source: Optional[str] = None) -> UnaryAlgebra:
        """Parses a JSON algebra document.

        :param text: the contents of the document
        :param source: the name of the document, used in error messages
        :return: the parsed algebra
        """
        try:
            data = json5.loads(text)
        except ValueError as error:
            raise AlgebraFormatError(None, f"invalid JSON: {error}", source)

        if not isinstance(data, dict) or "carrier" not in data:
            raise AlgebraFormatError(None, "expected an object with a 'carrier' key", source)

        ops = data.get("ops", {})
        if not isinstance(ops, dict) or not all(isinstance(table, list) for table in ops.values()):
            raise AlgebraFormatError(None, "'ops' must map operation names to lists of values", source)
        if not isinstance(data["carrier"], int) \
                or not all(isinstance(value, int) for table in ops.values() for value in table):
            raise AlgebraFormatError(None, "the carrier and all values must be integers", source)

        try:
            return UnaryAlgebra(carrier_size=data["carrier"],
                                ops={name: tuple(table) for name, table in ops.items()},
                                name=data.get("name"))
        except InvalidAlgebraError as error:
            raise AlgebraFormatError(None, str(error), source)

    def dumps(self, algebra: UnaryAlgebra) -> str:
        """Renders an algebra in the line format."""
        lines = []
        if algebra.name is not None:
            lines.append(f"algebra {algebra.name}")
        lines.append(f"carrier {algebra.carrier_size}")
        for name, table in algebra.ops.items():
            lines.append(f"op {name} " + " ".join(str(value) for value in table))
        return "\n".join(lines) + "\n"

    def dumps_json(self, algebra: UnaryAlgebra) -> str:
        """Renders an algebra as a JSON document."""
        return json.dumps({"name": algebra.name,
                           "carrier": algebra.carrier_size,
                           "ops": {name: list(table) for name, table in algebra.ops.items()}}, indent=4) + "\n"
