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

from dependency_injector.containers import DeclarativeContainer
from dependency_injector.providers import Singleton

from ua.components.config.cli_config_manager import CLIConfigManager
from ua.components.config.storage import Storage
from ua.components.io.algebra_codec import AlgebraCodec
from ua.components.io.field_codec import FieldCodec
from ua.components.io.subpower_codec import SubpowerCodec
from ua.components.util.logger import Logger
from ua.components.util.result_renderer import ResultRenderer
from ua.components.witness.claim_verifier import ClaimVerifier
from ua.constants import GENERAL_CONFIG_PATH


class Container(DeclarativeContainer):
    """The Container class wires all reusable components together."""
    logger = Singleton(Logger)

    general_storage = Singleton(Storage, file=GENERAL_CONFIG_PATH)
    cli_config_manager = Singleton(CLIConfigManager, general_storage)

    algebra_codec = Singleton(AlgebraCodec)
    field_codec = Singleton(FieldCodec)
    subpower_codec = Singleton(SubpowerCodec)

    claim_verifier = Singleton(ClaimVerifier, logger)
    result_renderer = Singleton(ResultRenderer, logger)


container = Container()
