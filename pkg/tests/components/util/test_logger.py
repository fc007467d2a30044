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

from _pytest.capture import CaptureFixture

from ua.components.util.logger import Logger


def assert_stdout_stderr(capsys: CaptureFixture, stdout: str, stderr: str) -> None:
    out, err = capsys.readouterr()
    assert out == stdout
    assert err == stderr


def test_debug_does_not_log_until_debug_logging_is_enabled(capsys: CaptureFixture) -> None:
    logger = Logger()
    logger.debug("Message 1")
    logger.debug_logging_enabled = True
    logger.debug("Message 2")

    assert_stdout_stderr(capsys, "", "Message 2\n")


def test_info_logs_message_to_stdout(capsys: CaptureFixture) -> None:
    logger = Logger()
    logger.info("Message")

    assert_stdout_stderr(capsys, "Message\n", "")


def test_output_prints_long_lines_unwrapped(capsys: CaptureFixture) -> None:
    logger = Logger()
    text = " ".join(["word"] * 50)
    logger.output(text)

    assert_stdout_stderr(capsys, text + "\n", "")


def test_output_prints_brackets_literally(capsys: CaptureFixture) -> None:
    logger = Logger()
    logger.output("[red]{0, 1}[/red]")

    assert_stdout_stderr(capsys, "[red]{0, 1}[/red]\n", "")


def test_warn_logs_message_to_stderr(capsys: CaptureFixture) -> None:
    logger = Logger()
    logger.warn("Message")

    assert_stdout_stderr(capsys, "", "Message\n")


def test_error_logs_message_to_stderr(capsys: CaptureFixture) -> None:
    logger = Logger()
    logger.error("Message")

    assert_stdout_stderr(capsys, "", "Message\n")
