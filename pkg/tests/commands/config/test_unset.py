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
from ua.constants import DEFAULT_THREADS
from ua.container import container


def test_config_unset_removes_the_value_of_the_option() -> None:
    container.cli_config_manager().threads.set_value("4")

    result = CliRunner().invoke(ua, ["config", "unset", "threads"])

    assert result.exit_code == 0
    assert result.output == "Successfully unset 'threads'\n"

    assert container.cli_config_manager().threads.get_stored_value() is None
    assert container.cli_config_manager().threads.get_value() == DEFAULT_THREADS


def test_config_unset_aborts_when_no_option_with_given_key_exists() -> None:
    result = CliRunner().invoke(ua, ["config", "unset", "this-option-does-not-exist"])

    assert result.exit_code == 2
