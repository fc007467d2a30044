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

import pytest

from tests.test_helpers import algebra
from ua.components.casebook.casebook import chain_algebra
from ua.components.graph.digraph import analyze_components, gamma
from ua.components.iso.isomorphism import are_isomorphic, section_top_counts
from ua.components.powers.powers import diagonals, induced_algebra, is_subdirect, tuple_format
from ua.components.witness.witness import (build_S, build_t, build_T, generators_of_t, make_witness_config,
                                           sigma)
from ua.models.errors import IndexRangeError, InvalidWitnessConfigError, NotDivisibleError, NotUncountableError


def test_make_witness_config_for_chain() -> None:
    config = make_witness_config(chain_algebra(), [5])

    assert config.f_min == (0, 0, 1)
    assert config.reorder == (2, 0, 1)
    assert config.length == 5


def test_make_witness_config_moves_least_merged_pair_last() -> None:
    config = make_witness_config(algebra(4, g=(0, 0, 2, 2)), [11, 13])

    assert config.reorder == (2, 3, 0, 1)
    assert config.length == 143


def test_make_witness_config_raises_when_countable() -> None:
    with pytest.raises(NotUncountableError):
        make_witness_config(algebra(3, s=(1, 2, 0)), [5])


def test_make_witness_config_raises_when_prime_below_carrier_size() -> None:
    with pytest.raises(InvalidWitnessConfigError):
        make_witness_config(chain_algebra(), [2, 5])


def test_sigma_splits_positions_by_residue() -> None:
    partition = sigma(5, 35)

    assert partition.class_count == 5
    assert all(len(block) == 7 for block in partition.blocks)
    assert partition.block_of(12) == tuple(range(2, 35, 5))


def test_sigma_raises_when_modulus_does_not_divide() -> None:
    with pytest.raises(NotDivisibleError):
        sigma(5, 12)


def test_residue_classes_of_coprime_moduli_meet() -> None:
    for first, second in itertools.product(sigma(5, 35).blocks, sigma(7, 35).blocks):
        assert set(first) & set(second)


def test_build_t_for_chain() -> None:
    config = make_witness_config(chain_algebra(), [5])

    assert build_t(config, 5, 0) == (2, 0, 1, 1, 1)
    assert build_t(config, 5, 1) == (2, 0, 0, 1, 1)
    assert build_t(config, 5, 2) == (2, 0, 0, 0, 1)


def test_build_t_repeats_pattern_along_residues() -> None:
    config = make_witness_config(chain_algebra(), [5, 7])

    element = build_t(config, 5, 1)

    assert len(element) == 35
    assert all(element[position] == element[position % 5] for position in range(35))


def test_build_t_raises_when_level_out_of_range() -> None:
    config = make_witness_config(chain_algebra(), [5])

    with pytest.raises(IndexRangeError):
        build_t(config, 5, 3)


def test_build_t_raises_when_prime_not_configured() -> None:
    config = make_witness_config(chain_algebra(), [5])

    with pytest.raises(InvalidWitnessConfigError):
        build_t(config, 7, 0)


@pytest.mark.parametrize("unary_algebra,primes", [(chain_algebra(), [7, 11]),
                                                  (algebra(4, g=(0, 0, 2, 2)), [5, 7]),
                                                  (algebra(3, f=(1, 1, 2), g=(0, 2, 2)), [5, 7])])
def test_generators_have_full_content_and_refined_format(unary_algebra, primes) -> None:
    config = make_witness_config(unary_algebra, primes)

    for prime in config.primes:
        generators = generators_of_t(config, prime)
        assert len(generators) == prime - config.carrier_size + 1

        for generator in generators:
            assert set(generator) == set(range(config.carrier_size))
            assert sigma(prime, config.length).refines(tuple_format(generator))

        images = {tuple(config.f_min[entry] for entry in generator) for generator in generators}
        assert len(images) == 1

        for first, second in itertools.combinations(generators, 2):
            assert not tuple_format(first).refines(tuple_format(second))
            assert not tuple_format(second).refines(tuple_format(first))


def test_build_T_for_chain_has_expected_top_components() -> None:
    config = make_witness_config(chain_algebra(), [7])
    subpower = build_T(config, 7)
    analysis = analyze_components(gamma(induced_algebra(subpower)))

    assert len(subpower) == 7
    assert analysis.top_count == 5
    assert len(analysis.connected_components) == 1


def test_build_T_top_component_counts_follow_primes() -> None:
    for prime, expected in [(7, 5), (11, 9), (13, 11)]:
        config = make_witness_config(chain_algebra(), [prime])
        induced = induced_algebra(build_T(config, prime))

        assert analyze_components(gamma(induced)).top_count == expected


def test_generators_lie_in_distinct_top_components() -> None:
    config = make_witness_config(chain_algebra(), [11])
    subpower = build_T(config, 11)
    analysis = analyze_components(gamma(induced_algebra(subpower)))

    tops = [analysis.scc_of(subpower.index(generator)) for generator in subpower.generators]

    assert all(top in analysis.top_sccs for top in tops)
    assert len(set(tops)) == len(tops)


def test_build_S_of_no_primes_is_the_diagonal() -> None:
    config = make_witness_config(chain_algebra(), [7])

    assert build_S(config, []).elements == ((0,) * 7, (1,) * 7, (2,) * 7)


def test_build_S_is_subdirect() -> None:
    config = make_witness_config(chain_algebra(), [7, 11])

    assert is_subdirect(build_S(config, [7]))


def test_intersections_of_witness_subpowers_are_the_zero_diagonal() -> None:
    config = make_witness_config(chain_algebra(), [7, 11])
    diagonal, zero_diagonal, _ = diagonals(chain_algebra(), config.length)
    first, second = build_T(config, 7), build_T(config, 11)

    assert first.intersection(second) == zero_diagonal.as_set() == {(0,) * 77}
    assert first.intersection(diagonal) == zero_diagonal.as_set()


def test_witness_subpowers_of_different_primes_are_not_isomorphic() -> None:
    config = make_witness_config(chain_algebra(), [7, 11])

    assert are_isomorphic(induced_algebra(build_T(config, 7)), induced_algebra(build_T(config, 11))) is None


def test_outer_sections_of_S_carry_the_witness_top_counts() -> None:
    config = make_witness_config(chain_algebra(), [7, 11])

    assert section_top_counts(induced_algebra(build_S(config, [7, 11]))) == [1, 5, 9]
    assert section_top_counts(induced_algebra(build_S(config, []))) == [1]
