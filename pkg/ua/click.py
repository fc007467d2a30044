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
from typing import Optional, Tuple

import click

from ua.components.powers.powers import parse_tuple
from ua.container import container
from ua.models.command import CommandResult
from ua.models.errors import CapacityError, UnaryAlgebraError
from ua.models.witness import is_prime


class InvalidInputError(click.ClickException):
    """Raised when a command's input cannot be processed, exits with the usage error code."""
    exit_code = 2


class CapacityExceededError(click.ClickException):
    """Raised when a computation would exceed a configured cap."""
    exit_code = 3


class UACommand(click.Command):
    """A click.Command wrapper which renders CommandResult values and maps library errors to exit codes."""

    def __init__(self, computes: bool = False, *args, **kwargs):
        """Creates a new UACommand instance.

        :param computes: True if the command runs capped computations and accepts the cap and thread options
        :param args: the args that are passed on to the click.Command constructor
        :param kwargs: the kwargs that are passed on to the click.Command constructor
        """
        self._computes = computes

        super().__init__(*args, **kwargs)

        # max_content_width defaults to 80, which we increase to 120 to improve readability on wide terminals
        self.context_settings["max_content_width"] = 120

    def invoke(self, ctx: click.Context):
        try:
            result = super().invoke(ctx)
        except CapacityError as error:
            raise CapacityExceededError(str(error))
        except UnaryAlgebraError as error:
            raise InvalidInputError(str(error))

        if isinstance(result, CommandResult):
            command_name = " ".join(ctx.command_path.split()[1:])
            container.result_renderer().render(command_name, result)

            if result.exit_code != 0:
                ctx.exit(result.exit_code)

        return result

    def get_params(self, ctx: click.Context):
        params = super().get_params(ctx)

        extra = [
            click.Option(["--json", "json_output"],
                         help="Print the result as a single JSON document",
                         is_flag=True,
                         default=False,
                         expose_value=False,
                         is_eager=True,
                         callback=self._parse_json_option),
            click.Option(["--verbose"],
                         help="Enable debug logging",
                         is_flag=True,
                         default=False,
                         expose_value=False,
                         is_eager=True,
                         callback=self._parse_verbose_option)
        ]

        if self._computes:
            for key, help_text in [("cap-carrier", "The largest carrier for monoid and congruence computations"),
                                   ("cap-elements", "The largest number of elements of a generated subpower"),
                                   ("threads", "The number of threads used for internal parallelism")]:
                extra.append(click.Option([f"--{key}", key.replace("-", "_")],
                                          type=click.IntRange(min=1),
                                          help=f"{help_text} (overrides `ua config set {key}`)",
                                          expose_value=False,
                                          is_eager=True,
                                          callback=self._parse_override_option))

        for option in extra:
            params.insert(len(params) - 1, option)

        return params

    def _parse_json_option(self, ctx: click.Context, param: click.Parameter, value: Optional[bool]) -> None:
        """Parses the --json option."""
        container.result_renderer().json_enabled = bool(value)

    def _parse_verbose_option(self, ctx: click.Context, param: click.Parameter, value: Optional[bool]) -> None:
        """Parses the --verbose option."""
        if value:
            container.logger().debug_logging_enabled = True

    def _parse_override_option(self, ctx: click.Context, param: click.Parameter, value: Optional[int]) -> None:
        """Parses the options which override a configured cap for one invocation."""
        option = container.cli_config_manager().get_option_by_key(param.name.replace("_", "-"))
        option.override = value


class PathParameter(click.ParamType):
    """A limited version of click.Path which uses pathlib.Path."""

    def __init__(self, exists: bool = False, file_okay: bool = True, dir_okay: bool = True):
        """Creates a new PathParameter instance.

        :param exists: True if the path needs to point to an existing object, False if not
        :param file_okay: True if the path may point to a file, False if not
        :param dir_okay: True if the path may point to a directory, False if not
        """
        self._exists = exists
        self._file_okay = file_okay
        self._dir_okay = dir_okay

        if file_okay and not dir_okay:
            self.name = "file"
            self._path_type = "File"
        elif dir_okay and not file_okay:
            self.name = "directory"
            self._path_type = "Directory"
        else:
            self.name = "path"
            self._path_type = "Path"

    def convert(self, value: str, param: click.Parameter, ctx: click.Context) -> Path:
        path = Path(value).expanduser().resolve()

        if self._exists and not path.exists():
            self.fail(f"{self._path_type} '{value}' does not exist.", param, ctx)

        if not self._file_okay and path.is_file():
            self.fail(f"{self._path_type} '{value}' is a file.", param, ctx)

        if not self._dir_okay and path.is_dir():
            self.fail(f"{self._path_type} '{value}' is a directory.", param, ctx)

        return path


class TupleParameter(click.ParamType):
    """A click parameter which parses tuple literals like (2,0,1)."""

    name = "tuple"

    def get_metavar(self, param: click.Parameter, ctx: Optional[click.Context] = None) -> str:
        return "(x1,x2,...)"

    def convert(self, value, param: click.Parameter, ctx: click.Context) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value

        try:
            return parse_tuple(value)
        except UnaryAlgebraError as error:
            self.fail(str(error), param, ctx)


class PrimesParameter(click.ParamType):
    """A click parameter which parses a comma-separated list of distinct primes, returned in increasing order."""

    name = "primes"

    def get_metavar(self, param: click.Parameter, ctx: Optional[click.Context] = None) -> str:
        return "p1,p2,..."

    def convert(self, value, param: click.Parameter, ctx: click.Context) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value

        parts = [part.strip() for part in str(value).split(",") if part.strip() != ""]
        if len(parts) == 0 or not all(part.isdecimal() for part in parts):
            self.fail(f"'{value}' is not a comma-separated list of primes.", param, ctx)

        primes = [int(part) for part in parts]
        if len(set(primes)) != len(primes):
            self.fail(f"'{value}' contains duplicate primes.", param, ctx)

        composite = next((number for number in primes if not is_prime(number)), None)
        if composite is not None:
            self.fail(f"{composite} is not a prime.", param, ctx)

        return tuple(sorted(primes))
