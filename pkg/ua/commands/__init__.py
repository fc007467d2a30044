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

from ua.commands.ua import ua
from ua.commands.boolean_power import boolean_power
from ua.commands.canon import canon
from ua.commands.classify import classify
from ua.commands.components import components
from ua.commands.config import config
from ua.commands.congruences import congruences
from ua.commands.cycle_lcm import cycle_lcm
from ua.commands.enumerate import enumerate
from ua.commands.gamma import gamma
from ua.commands.iso import iso
from ua.commands.monoid import monoid
from ua.commands.outer_sections import outer_sections
from ua.commands.si import si
from ua.commands.subpower import subpower
from ua.commands.transposition_distance import transposition_distance
from ua.commands.witness import witness

ua.add_command(config)
ua.add_command(classify)
ua.add_command(monoid)
ua.add_command(components)
ua.add_command(outer_sections)
ua.add_command(congruences)
ua.add_command(si, aliases=["subdirectly-irreducible"])
ua.add_command(enumerate, aliases=["census"])
ua.add_command(iso)
ua.add_command(canon)
ua.add_command(gamma)
ua.add_command(subpower)
ua.add_command(witness)
ua.add_command(boolean_power, aliases=["bpower"])
ua.add_command(cycle_lcm)
ua.add_command(transposition_distance, aliases=["tdist"])
