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

from typing import Optional

from ua.components.config.storage import Storage


class Option:
    """An Option instance manages a single integer setting in a Storage instance.

    A value given on the command line overrides the stored value for the current invocation only.
    """

    def __init__(self, key: str, description: str, default: int, minimum: int, storage: Storage) -> None:
        """Creates a new Option instance.

        :param key: the name of the key of the option in the given Storage instance, using hyphens for separation
        :param description: a display-friendly description of the option
        :param default: the value used when the option is neither stored nor overridden
        :param minimum: the smallest value the option accepts
        :param storage: the Storage instance to store this option in
        """
        self.key = key
        self.description = description
        self.default = default
        self.minimum = minimum
        self.override: Optional[int] = None

        self._storage = storage
        self.location = storage.file

    def get_stored_value(self) -> Optional[int]:
        """Returns the stored value of the option, None if it is not set."""
        return self._storage.get(self.key)

    def get_value(self) -> int:
        """Returns the value in effect: the override, else the stored value, else the default."""
        if self.override is not None:
            return self.override

        stored = self.get_stored_value()
        return self.default if stored is None else int(stored)

    def set_value(self, value: str) -> None:
        """Validates and stores a new value.

        :param value: the new value as typed by the user
        """
        self._storage.set(self.key, self.validate(value))

    def validate(self, value: str) -> int:
        try:
            parsed = int(str(value).strip())
        except ValueError:
            raise ValueError(f"Invalid value, '{self.key}' only accepts integers")

        if parsed < self.minimum:
            raise ValueError(f"Invalid value, '{self.key}' must be at least {self.minimum}")

        return parsed

    def unset(self) -> None:
        """Unsets any stored value of the option."""
        self._storage.delete(self.key)
