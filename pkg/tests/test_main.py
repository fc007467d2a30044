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

import pytest
from _pytest.capture import CaptureFixture
from click.testing import CliRunner

from tests.test_helpers import create_chain_file, write_algebra
from ua.commands import ua
from ua.main import run


def test_ua_shows_help_when_called_with_help_option() -> None:
    result = CliRunner().invoke(ua, ["--help"])

    assert result.exit_code == 0
    assert "Usage: ua [OPTIONS] COMMAND [ARGS]..." in result.output


def test_ua_shows_error_when_running_unknown_command() -> None:
    result = CliRunner().invoke(ua, ["this-command-does-not-exist"])

    assert result.exit_code != 0
    assert "No such command" in result.output


def test_run_returns_0_on_success(capsys: CaptureFixture) -> None:
    create_chain_file()

    assert run(["classify", "chain.alg"]) == 0
    assert "Uncountable (witness op: f)" in capsys.readouterr().out


def test_run_returns_1_when_check_computes_false(capsys: CaptureFixture) -> None:
    create_chain_file()
    write_algebra(Path.cwd() / "swap.alg", 3, {"f": (1, 0, 2)})

    assert run(["iso", "chain.alg", "swap.alg"]) == 1
    assert "not isomorphic" in capsys.readouterr().out


def test_run_returns_2_on_usage_error(capsys: CaptureFixture) -> None:
    assert run(["classify"]) == 2
    assert "Missing argument" in capsys.readouterr().err


def test_run_returns_2_on_invalid_input(capsys: CaptureFixture) -> None:
    (Path.cwd() / "broken.alg").write_text("carrier 2\nop f 0 7\n", encoding="utf-8")

    assert run(["classify", "broken.alg"]) == 2
    assert "broken.alg:2" in capsys.readouterr().err


def test_run_returns_3_when_cap_exceeded(capsys: CaptureFixture) -> None:
    create_chain_file()

    assert run(["monoid", "chain.alg", "--cap-carrier", "2"]) == 3
    assert "cap-carrier" in capsys.readouterr().err


def test_run_prints_json_document(capsys: CaptureFixture) -> None:
    create_chain_file()

    assert run(["classify", "chain.alg", "--json"]) == 0

    document = json.loads(capsys.readouterr().out)
    assert document["schema_version"] == 1
    assert document["command"] == "classify"
    assert document["exit_code"] == 0


@pytest.mark.parametrize("command", sorted(ua.commands.keys()))
def test_run_shows_help_of_every_command(command: str, capsys: CaptureFixture) -> None:
    assert run([command, "--help"]) == 0
    assert f"Usage: ua {command}" in capsys.readouterr().out


def test_run_returns_2_on_invalid_tuple_argument(capsys: CaptureFixture) -> None:
    assert run(["transposition-distance", "-m", "3", "(0,x)", "(0,1)"]) == 2
    assert "Invalid value" in capsys.readouterr().err
