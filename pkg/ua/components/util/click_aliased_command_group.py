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

from typing import Dict, Iterable, Optional

import click


class AliasedCommandGroup(click.Group):
    """A click.Group which also resolves commands by their aliases.

    Aliases are not listed as separate commands, the help text of an aliased command mentions them.
    """

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._aliases: Dict[str, str] = {}

    def add_command(self, cmd: click.Command, name: Optional[str] = None, aliases: Iterable[str] = ()) -> None:
        super().add_command(cmd, name)

        aliases = list(aliases)
        for alias in aliases:
            self._aliases[alias] = name or cmd.name

        if len(aliases) > 0:
            cmd.help = (cmd.help or "").rstrip() + f"\n\nAliases: {', '.join(aliases)}."

    def get_command(self, ctx: click.Context, cmd_name: str) -> Optional[click.Command]:
        return super().get_command(ctx, self._aliases.get(cmd_name, cmd_name))

    def resolve_command(self, ctx: click.Context, args):
        _, cmd, remaining = super().resolve_command(ctx, args)
        return (cmd.name if cmd is not None else None), cmd, remaining
