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

import sys
import traceback
from io import StringIO
from typing import Optional, Sequence

import click
from pydantic import ValidationError

from ua.commands import ua
from ua.container import container
from ua.models.command import CommandResult

# The exit code of usage errors and of unexpected failures
USAGE_EXIT_CODE = 2


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Runs a ua command and returns its exit code instead of exiting.

    :param argv: the arguments after the program name, defaults to sys.argv[1:]
    :return: 0 on success, 1 when a verification check failed, 2 on usage errors, 3 when a cap was exceeded
    """
    try:
        outcome = ua.main(args=list(sys.argv[1:] if argv is None else argv), prog_name="ua", standalone_mode=False)
    except Exception as exception:
        logger = container.logger()
        logger.debug(traceback.format_exc().strip())

        if isinstance(exception, click.UsageError):
            io = StringIO()
            exception.show(file=io)
            logger.error(io.getvalue().strip())
            return exception.exit_code
        if isinstance(exception, click.ClickException):
            logger.error(f"Error: {exception.format_message()}")
            return exception.exit_code
        if isinstance(exception, click.Abort):
            logger.error("Aborted!")
            return 1

        if isinstance(exception, ValidationError) and hasattr(exception, "input_value"):
            logger.debug("Value that failed validation:")
            logger.debug(exception.input_value)

        logger.error(f"Error: {exception}")
        return USAGE_EXIT_CODE

    if isinstance(outcome, int):
        return outcome
    if isinstance(outcome, CommandResult):
        return outcome.exit_code
    return 0


def main() -> None:
    """This function is the entrypoint when running a ua command in a terminal."""
    sys.exit(run())


if __name__ == "__main__":
    main()
