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

from tests.test_helpers import create_chain_file, write_algebra
from ua.commands import ua


def test_outer_sections_lists_sections_of_chain() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["outer-sections", "chain.alg"])

    assert result.exit_code == 0
    assert result.output == "chain has 1 outer section\n{1,2}: 1 top component; edges: 2->1 (f)\n"


def test_outer_sections_lists_every_branch_of_star() -> None:
    write_algebra(Path.cwd() / "star.alg", 5, {"f": (0, 0, 0, 1, 2)}, name="star")

    result = CliRunner().invoke(ua, ["outer-sections", "star.alg"])

    assert result.exit_code == 0
    assert "star has 2 outer sections" in result.output
    assert "{1,3}: 1 top component; edges: 3->1 (f)" in result.output
    assert "{2,4}: 1 top component; edges: 4->2 (f)" in result.output


def test_outer_sections_aborts_when_algebra_not_connected() -> None:
    write_algebra(Path.cwd() / "loops.alg", 2, {"f": (0, 1)})

    result = CliRunner().invoke(ua, ["outer-sections", "loops.alg"])

    assert result.exit_code == 2


def test_outer_sections_aborts_when_algebra_has_no_bottom() -> None:
    write_algebra(Path.cwd() / "forked.alg", 3, {"f": (1, 1, 2), "g": (2, 1, 2)})

    result = CliRunner().invoke(ua, ["outer-sections", "forked.alg"])

    assert result.exit_code == 2
