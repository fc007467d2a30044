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


def test_components_describes_chain() -> None:
    create_chain_file()

    result = CliRunner().invoke(ua, ["components", "chain.alg"])

    assert result.exit_code == 0
    assert result.output == ("Connected components: {0,1,2}\n"
                             "Strongly connected components: {0} {1} {2}\n"
                             "Order: {1} > {0}, {2} > {1}\n"
                             "Top components: {2}\n"
                             "Bottom of {0,1,2}: {0}\n")


def test_components_reports_missing_bottom() -> None:
    write_algebra(Path.cwd() / "forked.alg", 3, {"f": (1, 1, 2), "g": (2, 1, 2)})

    result = CliRunner().invoke(ua, ["components", "forked.alg"])

    assert result.exit_code == 0
    assert "Bottom of {0,1,2}: none" in result.output
