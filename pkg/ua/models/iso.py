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

from ua.models.pydantic import WrappedBaseModel


class CanonicalCode(WrappedBaseModel):
    """A byte string identifying an algebra up to isomorphism.

    It encodes the carrier size, the sorted operation names and every table under the canonical relabeling,
    with fixed-width big-endian integers so that byte order agrees with the order of the encoded tables.
    """
    data: bytes

    @property
    def hex(self) -> str:
        return self.data.hex()

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.data < other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __str__(self) -> str:
        return self.hex
