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
from ua.container import container


def test_config_set_updates_the_value_of_the_option() -> None:
    result = CliRunner().invoke(ua, ["config", "set", "threads", "4"])

    assert result.exit_code == 0
    assert "Successfully updated the value of 'threads' to '4'" in result.output

    assert container.cli_config_manager().threads.get_value() == 4


def test_config_set_aborts_when_no_option_with_given_key_exists() -> None:
    result = CliRunner().invoke(ua, ["config", "set", "this-option-does-not-exist", "4"])

    assert result.exit_code == 2
    assert "ua config list" in result.output


def test_config_set_aborts_when_value_is_not_an_integer() -> None:
    result = CliRunner().invoke(ua, ["config", "set", "cap-carrier", "many"])

    assert result.exit_code == 2
    assert "only accepts integers" in result.output

    assert container.cli_config_manager().cap_carrier.get_stored_value() is None


def test_config_set_aborts_when_value_below_minimum() -> None:
    result = CliRunner().invoke(ua, ["config", "set", "search-timeout", "0"])

    assert result.exit_code == 2
    assert "must be at least 1" in result.output
