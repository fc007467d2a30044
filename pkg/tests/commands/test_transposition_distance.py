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

from click.testing import CliRunner

from ua.commands import ua


def test_transposition_distance_prints_distance() -> None:
    result = CliRunner().invoke(ua, ["transposition-distance", "-m", "4", "(0,1)", "(2,3)"])

    assert result.exit_code == 0
    assert result.output == "2\n"


def test_transposition_distance_reports_unreachable_targets() -> None:
    result = CliRunner().invoke(ua, ["tdist", "-m", "3", "(0,0)", "(0,1)"])

    assert result.exit_code == 0
    assert result.output == "unreachable\n"


def test_transposition_distance_aborts_when_lengths_differ() -> None:
    result = CliRunner().invoke(ua, ["transposition-distance", "-m", "3", "(0,1)", "(0,1,2)"])

    assert result.exit_code == 2
