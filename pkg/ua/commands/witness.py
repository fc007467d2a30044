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
from typing import Optional, Tuple

import click
from rich import box
from rich.table import Table

from ua.click import PathParameter, PrimesParameter, UACommand
from ua.components.graph.digraph import top_component_count
from ua.components.powers.powers import format_tuple, induced_algebra
from ua.components.witness.witness import build_S, build_T, generators_of_t, make_witness_config
from ua.container import container
from ua.models.command import CommandResult
from ua.models.witness import ClaimReport


def _format_value(value) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{key}={_format_value(item)}" for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format_value(item) for item in value) + "]"
    return str(value)


def _claim_table(report: ClaimReport) -> Table:
    table = Table(box=box.SQUARE)
    table.add_column("Claim")
    table.add_column("Parameters", overflow="fold")
    table.add_column("Computed", overflow="fold")
    table.add_column("Expected", overflow="fold")
    table.add_column("Result")
    table.add_column("Method")

    for record in report.records:
        result = "SKIP" if record.passed is None else "PASS" if record.passed else "FAIL"
        table.add_row(record.claim,
                      _format_value(record.params),
                      _format_value(record.computed) if record.computed is not None else "",
                      _format_value(record.expected) if record.expected is not None else "",
                      result,
                      record.method or "")

    return table


@click.command(cls=UACommand, computes=True)
@click.argument("algebra", type=PathParameter(exists=True, file_okay=True, dir_okay=False))
@click.option("--primes", type=PrimesParameter(), required=True, help="The primes indexing the family, e.g. 7,11")
@click.option("--verify", is_flag=True, default=False, help="Mechanically check every claim about the family")
@click.option("--subsets-max",
              type=click.IntRange(min=0),
              help="Only compare subsets of at most this many primes in the non-isomorphism check")
@click.option("--search-timeout",
              type=click.IntRange(min=1),
              help="Seconds per isomorphism search before falling back to the invariant "
                   "(overrides `ua config set search-timeout`)")
@click.option("--export",
              type=PathParameter(exists=False, file_okay=True, dir_okay=False),
              help="Write S_K for all given primes to this file in the subpower format")
def witness(algebra: Path,
            primes: Tuple[int, ...],
            verify: bool,
            subsets_max: Optional[int],
            search_timeout: Optional[int],
            export: Optional[Path]) -> CommandResult:
    """Build the family of pairwise non-isomorphic subdirect powers of an algebra of uncountable type.

    The index set has the product of the primes as size. T_p is generated by p-n+1 tuples constant on the residue
    classes modulo p, S_K is the union of the diagonal with T_p for every p in K.
    """
    parsed = container.algebra_codec().read(algebra)
    config_manager = container.cli_config_manager()
    logger = container.logger()

    carrier_cap = config_manager.cap_carrier.get_value()
    element_cap = config_manager.cap_elements.get_value()

    config = make_witness_config(parsed, primes, cap=carrier_cap)
    logger.debug(f"f_min = {list(config.f_min)}, ordering = {list(config.reorder)}, N = {config.length}")

    data = {"algebra": parsed.display_name(),
            "primes": list(config.primes),
            "length": config.length,
            "f_min": list(config.f_min),
            "reorder": list(config.reorder)}
    views = [f"f_min: {' '.join(str(value) for value in config.f_min)}",
             f"Ordering a_1..a_n: {' '.join(str(value) for value in config.reorder)}",
             f"Index set size N: {config.length}"]

    families = []
    for prime in config.primes:
        subpower = build_T(config, prime, cap=element_cap)
        top_count = top_component_count(induced_algebra(subpower))
        families.append({"p": prime,
                         "generators": [format_tuple(generator) for generator in generators_of_t(config, prime)],
                         "size": len(subpower),
                         "top_components": top_count})
        views.append(f"T_{prime}: {len(subpower)} elements, {top_count} top components")
    data["families"] = families

    if export is not None:
        container.subpower_codec().write(export, build_S(config, config.primes, cap=element_cap))
        views.append(f"Wrote S_K for K = {{{','.join(str(prime) for prime in config.primes)}}} to {export}")

    exit_code = 0
    if verify:
        report = container.claim_verifier().verify_claims(
            config,
            subsets_max=subsets_max,
            element_cap=element_cap,
            carrier_cap=carrier_cap,
            search_timeout=search_timeout or config_manager.search_timeout.get_value(),
            threads=config_manager.threads.get_value())

        data["records"] = report.records
        data["all_passed"] = report.all_passed
        views.append(_claim_table(report))
        views.append("All checks passed" if report.all_passed else f"{len(report.failed)} checks failed")

        if not report.all_passed:
            exit_code = 1

    return CommandResult(exit_code=exit_code, data=data, views=views)
