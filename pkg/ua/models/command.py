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

from typing import Any, Dict, List

from ua.models.pydantic import WrappedBaseModel


class CommandResult(WrappedBaseModel):
    """The outcome of a command.

    exit_code is 0 on success and 1 when a verification check computed false.
    data is the JSON payload, views the rich renderables or strings shown in text mode.
    """
    exit_code: int = 0
    data: Dict[str, Any] = {}
    views: List[Any] = []
