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

from ua.constants import JSON_SCHEMA_VERSION
from ua.components.util.logger import Logger
from ua.components.util.report_encoder import ReportEncoder
from ua.models.command import CommandResult


class ResultRenderer:
    """The ResultRenderer class prints command results as text or as a single JSON document."""

    def __init__(self, logger: Logger) -> None:
        """Creates a new ResultRenderer instance.

        :param logger: the logger to print with
        """
        self._logger = logger
        self.json_enabled = False

    def render(self, command_name: str, result: CommandResult) -> None:
        """Prints a command result in the selected format.

        :param command_name: the name of the command that produced the result
        :param result: the result to print
        """
        if self.json_enabled:
            self._logger.output(self.to_json(command_name, result))
            return

        for view in result.views:
            if isinstance(view, str):
                self._logger.output(view)
            else:
                self._logger.info(view)

    def to_json(self, command_name: str, result: CommandResult) -> str:
        document = {
            "schema_version": JSON_SCHEMA_VERSION,
            "command": command_name,
            "exit_code": result.exit_code,
            "result": result.data
        }
        return json.dumps(document, cls=ReportEncoder, sort_keys=True, indent=2)
