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

from click.testing import CliRunner

from tests.test_helpers import create_chain_file, write_algebra
from ua.commands import ua


def test_iso_prints_isomorphism() -> None:
    create_chain_file()
    write_algebra(Path.cwd() / "reversed.alg", 3, {"f": (1, 2, 2)})

    result = CliRunner().invoke(ua, ["iso", "chain.alg", "reversed.alg"])

    assert result.exit_code == 0
    assert result.output == "isomorphic\n0->2, 1->1, 2->0\n"


def test_iso_exits_with_1_when_not_isomorphic() -> None:
    create_chain_file()
    write_algebra(Path.cwd() / "swap.alg", 3, {"f": (1, 0, 2)})

    result = CliRunner().invoke(ua, ["iso", "chain.alg", "swap.alg", "--json"])

    assert result.exit_code == 1

    document = json.loads(result.output)
    assert document["exit_code"] == 1
    assert document["result"] == {"isomorphic": False, "bijection": None}


def test_iso_aborts_when_operation_names_differ() -> None:
    create_chain_file()
    write_algebra(Path.cwd() / "other.alg", 3, {"g": (0, 0, 1)})

    result = CliRunner().invoke(ua, ["iso", "chain.alg", "other.alg"])

    assert result.exit_code == 2
