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

import itertools
import time
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from joblib import Parallel, delayed

from ua.constants import DEFAULT_CARRIER_CAP, DEFAULT_ELEMENT_CAP, DEFAULT_SEARCH_TIMEOUT
from ua.components.graph.digraph import analyze_components, gamma
from ua.components.iso.isomorphism import are_isomorphic, section_top_counts
from ua.components.powers.powers import diagonals, induced_algebra, is_subdirect, tuple_format
from ua.components.util.logger import Logger
from ua.components.witness.witness import build_S, build_T, generators_of_t, sigma
from ua.models.algebra import UnaryAlgebra
from ua.models.errors import SearchTimeoutError
from ua.models.powers import Subpower
from ua.models.witness import ClaimRecord, ClaimReport, WitnessConfig


class ClaimVerifier:
    """The ClaimVerifier mechanically checks the properties of a witness family at a finite index set."""

    def __init__(self, logger: Logger) -> None:
        """Creates a new ClaimVerifier instance.

        :param logger: the logger to report progress to
        """
        self._logger = logger

    def verify_claims(self,
                      config: WitnessConfig,
                      subsets_max: Optional[int] = None,
                      element_cap: int = DEFAULT_ELEMENT_CAP,
                      carrier_cap: int = DEFAULT_CARRIER_CAP,
                      search_timeout: float = DEFAULT_SEARCH_TIMEOUT,
                      threads: int = 1) -> ClaimReport:
        """Runs every check on a witness configuration.

        Failed checks are reported in the records, capacity problems are raised.

        :param config: the witness configuration to check
        :param subsets_max: the largest subset size compared in the non-isomorphism check, all subsets if None
        :param element_cap: the largest number of elements a generated subpower may have
        :param carrier_cap: the carrier cap of monoid generation
        :param search_timeout: the number of seconds a single isomorphism search may take
        :param threads: the number of threads used for the pairwise comparisons
        :return: the report listing every check
        """
        started = time.monotonic()

        subpowers = {}
        for prime in config.primes:
            subpowers[prime] = build_T(config, prime, cap=element_cap)
            self._logger.debug(f"T_{prime} has {len(subpowers[prime]):,} elements")

        diagonal, zero_diagonal, _ = diagonals(config.algebra, config.length, cap=carrier_cap)

        records = []
        records.extend(self._check_residue_classes(config))
        records.extend(self._check_generators(config))
        records.extend(self._check_top_components(config, subpowers))
        records.extend(self._check_intersections(config, subpowers, diagonal, zero_diagonal))
        records.extend(self._check_connectivity(config, subpowers, zero_diagonal))
        records.extend(self._check_subdirectness(config, element_cap))
        records.extend(self._check_separation(config, subsets_max, element_cap, search_timeout, threads))

        self._logger.debug(f"Verified {len(records)} checks in {time.monotonic() - started:.2f} seconds")

        return ClaimReport(algebra=config.algebra.display_name(),
                           primes=config.primes,
                           length=config.length,
                           f_min=config.f_min,
                           reorder=config.reorder,
                           records=records)

    def _check_residue_classes(self, config: WitnessConfig) -> List[ClaimRecord]:
        records = []

        for prime in config.primes:
            block_count = sigma(prime, config.length).class_count
            records.append(ClaimRecord(claim="1(i)",
                                       params={"p": prime},
                                       computed=block_count,
                                       expected=prime,
                                       passed=block_count == prime,
                                       method="count"))

        increasing = all(first < second for first, second in zip(config.primes, config.primes[1:]))
        records.append(ClaimRecord(claim="1(ii)",
                                   params={"n": config.carrier_size},
                                   computed=list(config.primes),
                                   expected=f"{config.carrier_size} <= p_1 < p_2 < ...",
                                   passed=increasing and config.primes[0] >= config.carrier_size,
                                   method="comparison"))

        for first, second in itertools.combinations(config.primes, 2):
            first_labels = sigma(first, config.length).labels()
            second_labels = sigma(second, config.length).labels()
            meeting = len(set(zip(first_labels, second_labels)))
            records.append(ClaimRecord(claim="1(iii)",
                                       params={"p": first, "q": second},
                                       computed=meeting,
                                       expected=first * second,
                                       passed=meeting == first * second,
                                       method="enumeration"))

        return records

    def _check_generators(self, config: WitnessConfig) -> List[ClaimRecord]:
        records = []

        for prime in config.primes:
            generators = generators_of_t(config, prime)
            residues = sigma(prime, config.length)

            refined = sum(1 for generator in generators if residues.refines(tuple_format(generator)))
            records.append(ClaimRecord(claim="format-refinement",
                                       params={"p": prime},
                                       computed=refined,
                                       expected=len(generators),
                                       passed=refined == len(generators),
                                       method="enumeration",
                                       note="generators whose format is refined by the residue classes"))

            images = {tuple(config.f_min[entry] for entry in generator) for generator in generators}
            records.append(ClaimRecord(claim="fmin-collapse",
                                       params={"p": prime},
                                       computed=len(images),
                                       expected=1,
                                       passed=len(images) == 1,
                                       method="enumeration",
                                       note="distinct images of the generators under f_min"))

        return records

    def _check_top_components(self, config: WitnessConfig, subpowers: Dict[int, Subpower]) -> List[ClaimRecord]:
        records = []

        for prime, subpower in subpowers.items():
            expected = prime - config.carrier_size + 1
            analysis = analyze_components(gamma(induced_algebra(subpower)))

            records.append(ClaimRecord(claim="2",
                                       params={"p": prime, "size": len(subpower)},
                                       computed=analysis.top_count,
                                       expected=expected,
                                       passed=analysis.top_count == expected,
                                       method="condensation"))

            top_vertices = {vertex: index
                            for index in analysis.top_sccs
                            for vertex in analysis.sccs[index]}
            generator_tops = [top_vertices.get(subpower.index(generator)) for generator in subpower.generators]
            separated = None not in generator_tops and len(set(generator_tops)) == len(generator_tops)
            records.append(ClaimRecord(claim="2-generators",
                                       params={"p": prime},
                                       computed=len(set(generator_tops) - {None}),
                                       expected=len(subpower.generators),
                                       passed=separated,
                                       method="condensation",
                                       note="top components holding exactly one generator each"))

        return records

    def _check_intersections(self,
                             config: WitnessConfig,
                             subpowers: Dict[int, Subpower],
                             diagonal: Subpower,
                             zero_diagonal: Subpower) -> List[ClaimRecord]:
        records = []
        zero = zero_diagonal.as_set()

        for first, second in itertools.permutations(config.primes, 2):
            with_other = subpowers[first].intersection(subpowers[second])
            with_diagonal = subpowers[first].intersection(diagonal)
            records.append(ClaimRecord(claim="3",
                                       params={"p": first, "q": second},
                                       computed={"T_p & T_q": len(with_other), "T_p & D": len(with_diagonal)},
                                       expected={"D_0": len(zero)},
                                       passed=with_other == zero and with_diagonal == zero,
                                       method="set equality",
                                       note="sizes of the intersections, passing requires equality with D_0"))

        return records

    def _check_connectivity(self,
                            config: WitnessConfig,
                            subpowers: Dict[int, Subpower],
                            zero_diagonal: Subpower) -> List[ClaimRecord]:
        records = []

        for prime, subpower in subpowers.items():
            graph = gamma(induced_algebra(subpower)).to_plain()
            outside = [subpower.index(element) for element in subpower if element not in zero_diagonal]
            remaining = graph.subgraph(outside)
            components = nx.number_weakly_connected_components(remaining) if len(outside) > 0 else 0

            records.append(ClaimRecord(claim="4",
                                       params={"p": prime},
                                       computed=components,
                                       expected=1,
                                       passed=components == 1,
                                       method="connectivity",
                                       note="connected components of T_p without D_0"))

        return records

    def _check_subdirectness(self, config: WitnessConfig, element_cap: int) -> List[ClaimRecord]:
        subpower = build_S(config, config.primes, cap=element_cap)
        subdirect = is_subdirect(subpower)
        return [ClaimRecord(claim="subdirect",
                            params={"K": list(config.primes), "size": len(subpower)},
                            computed=subdirect,
                            expected=True,
                            passed=subdirect,
                            method="projection")]

    def _check_separation(self,
                          config: WitnessConfig,
                          subsets_max: Optional[int],
                          element_cap: int,
                          search_timeout: float,
                          threads: int) -> List[ClaimRecord]:
        if not config.supports_separation():
            return [ClaimRecord(claim="5",
                                params={"primes": list(config.primes)},
                                passed=None,
                                method="skipped",
                                note=f"every prime must exceed 2n = {2 * config.carrier_size} "
                                     f"for the non-isomorphism check")]

        largest = len(config.primes) if subsets_max is None else min(subsets_max, len(config.primes))
        subsets = [subset
                   for size in range(largest + 1)
                   for subset in itertools.combinations(config.primes, size)]

        algebras = {}
        for subset in subsets:
            algebras[subset] = induced_algebra(build_S(config, subset, cap=element_cap),
                                               name="S_{" + ",".join(str(prime) for prime in subset) + "}")
        profiles = {subset: section_top_counts(algebra) for subset, algebra in algebras.items()}

        pairs = list(itertools.combinations(subsets, 2))
        self._logger.debug(f"Comparing {len(pairs)} pairs of subsets")

        return Parallel(n_jobs=threads, backend="threading")(
            delayed(self._compare)(first, second, algebras, profiles, search_timeout) for first, second in pairs)

    def _compare(self,
                 first: Tuple[int, ...],
                 second: Tuple[int, ...],
                 algebras: Dict[Tuple[int, ...], UnaryAlgebra],
                 profiles: Dict[Tuple[int, ...], Sequence[int]],
                 search_timeout: float) -> ClaimRecord:
        invariant = "distinct" if profiles[first] != profiles[second] else "equal"

        try:
            bijection = are_isomorphic(algebras[first], algebras[second],
                                       deadline=time.monotonic() + search_timeout)
            search = "isomorphic" if bijection is not None else "not isomorphic"
            method = "search"
            passed = bijection is None
        except SearchTimeoutError:
            search = "timeout"
            method = "invariant"
            passed = invariant == "distinct"

        return ClaimRecord(claim="5",
                           params={"K": list(first), "L": list(second)},
                           computed={"search": search,
                                     "invariant": invariant,
                                     "section_top_counts": {"K": list(profiles[first]), "L": list(profiles[second])}},
                           expected="not isomorphic",
                           passed=passed,
                           method=method)
