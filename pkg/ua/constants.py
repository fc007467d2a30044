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

# Due to the way the filesystem is mocked in unit tests, values should not be Path instances.

# The file in which persistent CLI defaults are stored
GENERAL_CONFIG_PATH = str(Path("~/.ua/config").expanduser())

# The largest carrier for which the transformation monoid is generated (worst case n^n elements)
DEFAULT_CARRIER_CAP = 8

# The largest carrier for which congruences are enumerated (worst case Bell(n) partitions)
DEFAULT_CONGRUENCE_CAP = 9

# The largest number of elements a generated subpower may have
DEFAULT_ELEMENT_CAP = 1_000_000

# The largest n^N that may be enumerated by the monogenic census and by boolean powers
DEFAULT_ENUMERATION_CAP = 1_000_000

# The largest number of closed subsets enumerate_closed_subsets may return
DEFAULT_CLOSED_SUBSET_CAP = 100_000

# The number of threads used for internal parallelism
DEFAULT_THREADS = 1

# The number of seconds a single isomorphism search may take during claim verification
DEFAULT_SEARCH_TIMEOUT = 60

# The version of the JSON documents written by --json
JSON_SCHEMA_VERSION = 1
