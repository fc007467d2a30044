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

from typing import List

from ua.components.config.storage import Storage
from ua.constants import (DEFAULT_CARRIER_CAP, DEFAULT_CONGRUENCE_CAP, DEFAULT_ELEMENT_CAP,
                          DEFAULT_ENUMERATION_CAP, DEFAULT_SEARCH_TIMEOUT, DEFAULT_THREADS)
from ua.models.errors import UnaryAlgebraError
from ua.models.options import Option


class CLIConfigManager:
    """The CLIConfigManager class contains all configurable CLI options."""

    def __init__(self, general_storage: Storage) -> None:
        """Creates a new CLIConfigManager instance.

        :param general_storage: the Storage instance the options are stored in
        """
        self.cap_carrier = Option("cap-carrier",
                                  f"The largest carrier for which the transformation monoid is generated "
                                  f"({DEFAULT_CARRIER_CAP} if not set).",
                                  DEFAULT_CARRIER_CAP, 1, general_storage)

        self.cap_congruence = Option("cap-congruence",
                                     f"The largest carrier for which congruences are enumerated "
                                     f"({DEFAULT_CONGRUENCE_CAP} if not set).",
                                     DEFAULT_CONGRUENCE_CAP, 1, general_storage)

        self.cap_elements = Option("cap-elements",
                                   f"The largest number of elements a generated subpower may have "
                                   f"({DEFAULT_ELEMENT_CAP} if not set).",
                                   DEFAULT_ELEMENT_CAP, 1, general_storage)

        self.cap_enumeration = Option("cap-enumeration",
                                      f"The largest n^N enumerated by the monogenic census and by boolean powers "
                                      f"({DEFAULT_ENUMERATION_CAP} if not set).",
                                      DEFAULT_ENUMERATION_CAP, 1, general_storage)

        self.threads = Option("threads",
                              f"The number of threads used for internal parallelism ({DEFAULT_THREADS} if not set).",
                              DEFAULT_THREADS, 1, general_storage)

        self.search_timeout = Option("search-timeout",
                                     f"The number of seconds a single isomorphism search may take during claim "
                                     f"verification ({DEFAULT_SEARCH_TIMEOUT} if not set).",
                                     DEFAULT_SEARCH_TIMEOUT, 1, general_storage)

        self.all_options: List[Option] = [
            self.cap_carrier,
            self.cap_congruence,
            self.cap_elements,
            self.cap_enumeration,
            self.threads,
            self.search_timeout
        ]

    def get_option_by_key(self, key: str) -> Option:
        """Returns the option matching the given key.

        :param key: the key to look for
        :return: the option having a key equal to the given key
        """
        option = next((x for x in self.all_options if x.key == key), None)

        if option is None:
            raise UnaryAlgebraError(f"There doesn't exist an option with key '{key}', "
                                    f"run `ua config list` to see the available options")

        return option

    def congruence_cap(self) -> int:
        """Returns the carrier cap of congruence enumeration, a --cap-carrier flag overrides it as well."""
        if self.cap_carrier.override is not None:
            return self.cap_carrier.override
        return self.cap_congruence.get_value()

    def reset_overrides(self) -> None:
        for option in self.all_options:
            option.override = None
