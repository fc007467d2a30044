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

from click.testing import CliRunner

from tests.test_helpers import create_chain_file
from ua.commands import ua
from ua.components.casebook.casebook import chain_algebra
from ua.components.io.subpower_codec import SubpowerCodec


def test_subpower_lists_generated_elements() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(2,1)"])

    assert result.exit_code == 0
    assert result.output == "3 elements, not subdirect\n(0,0)\n(1,0)\ngen (2,1)\n"


def test_subpower_reports_subdirect_subpower() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(2,1)", "(1,2)"])

    assert result.exit_code == 0
    assert result.output.startswith("5 elements, subdirect\n")


def test_subpower_exports_subpower() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(2,1)", "--export", "out/t.txt"])

    assert result.exit_code == 0

    exported = SubpowerCodec().parse_text((Path.cwd() / "out" / "t.txt").read_text(encoding="utf-8"),
                                          chain_algebra())
    assert exported.elements == ((0, 0), (1, 0), (2, 1))
    assert exported.generators == ((2, 1),)


def test_subpower_aborts_when_generator_lengths_differ() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(2,1)", "(2,1,0)"])

    assert result.exit_code == 2


def test_subpower_aborts_when_entry_outside_carrier() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(3,1)"])

    assert result.exit_code == 2


def test_subpower_aborts_when_subpower_exceeds_cap() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["subpower", "chain.alg", "(2,1)", "--cap-elements", "2"])

    assert result.exit_code == 3
