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
from typing import Any

from pydantic import BaseModel

from ua.models.iso import CanonicalCode
from ua.models.partition import Partition
from ua.models.powers import Subpower


class ReportEncoder(json.JSONEncoder):
    """A JSON encoder which understands the models of the package."""

    def default(self, obj: Any) -> Any:
        if isinstance(obj, CanonicalCode):
            return obj.hex
        if isinstance(obj, Partition):
            return [list(block) for block in obj.blocks]
        if isinstance(obj, Subpower):
            return {"N": obj.length,
                    "base": obj.base.display_name(),
                    "elements": [list(element) for element in obj.elements],
                    "generators": [list(element) for element in obj.generators]}
        if isinstance(obj, BaseModel):
            return obj.dict(by_alias=True)
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if isinstance(obj, bytes):
            return obj.hex()
        return super().default(obj)
