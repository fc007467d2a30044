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

from ua.models.casebook import FieldOfSets
from ua.models.errors import AlgebraFormatError


class FieldCodec:
    """The FieldCodec class reads and writes fields of sets.

    A document holds a 'ground <m>' line followed by one or more 'members' lines listing binary strings of length m,
    the leftmost character describing element 0.
    """

    def read(self, path: Path) -> FieldOfSets:
        return self.parse_text(path.read_text(encoding="utf-8"), source=str(path))

    def parse_text(self, text: str, source: Optional[str] = None) -> FieldOfSets:
        ground_size = None
        members: List[int] = []

        for number, raw_line in enumerate(text.splitlines(), start=1):
            tokens = raw_line.split("#", 1)[0].split()
            if len(tokens) == 0:
                continue

            keyword, arguments = tokens[0], tokens[1:]
            if keyword == "ground":
                if ground_size is not None:
                    raise AlgebraFormatError(number, "duplicate ground line", source)
                if len(arguments) != 1 or not arguments[0].isdecimal() or int(arguments[0]) < 1:
                    raise AlgebraFormatError(number, "expected 'ground <m>' with a positive integer m", source)
                ground_size = int(arguments[0])
            elif keyword == "members":
                if ground_size is None:
                    raise AlgebraFormatError(number, "members line before the ground line", source)
                for member in arguments:
                    if len(member) != ground_size or any(char not in "01" for char in member):
                        raise AlgebraFormatError(number,
                                                 f"member '{member}' is not a binary string of length {ground_size}",
                                                 source)
                    members.append(sum(1 << index for index, char in enumerate(member) if char == "1"))
            else:
                raise AlgebraFormatError(number, f"unknown keyword '{keyword}'", source)

        if ground_size is None:
            raise AlgebraFormatError(None, "missing ground line", source)

        return FieldOfSets(ground_size=ground_size, members=tuple(members))

    def dumps(self, field: FieldOfSets) -> str:
        members = " ".join(FieldOfSets.format_member(member, field.ground_size) for member in field.members)
        return f"ground {field.ground_size}\nmembers {members}\n"
