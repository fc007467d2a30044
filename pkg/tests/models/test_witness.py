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

import pytest

from ua.components.casebook.casebook import chain_algebra
from ua.models.errors import InvalidWitnessConfigError
from ua.models.witness import ClaimRecord, ClaimReport, WitnessConfig, is_prime


def create_config(**overrides) -> WitnessConfig:
    values = {"algebra": chain_algebra(), "f_min": (0, 0, 1), "reorder": (2, 0, 1), "primes": (7, 11), "length": 77}
    values.update(overrides)
    return WitnessConfig(**values)


@pytest.mark.parametrize("value,expected", [(0, False), (1, False), (2, True), (9, False), (13, True), (91, False)])
def test_is_prime(value: int, expected: bool) -> None:
    assert is_prime(value) == expected


def test_witness_config_accepts_valid_values() -> None:
    config = create_config()

    assert config.carrier_size == 3
    assert config.supports_separation()


@pytest.mark.parametrize("overrides", [{"reorder": (0, 1, 1)},
                                       {"reorder": (0, 1, 2)},
                                       {"primes": ()},
                                       {"primes": (9,), "length": 9},
                                       {"primes": (2,), "length": 2},
                                       {"primes": (11, 7)},
                                       {"length": 76}])
def test_witness_config_raises_when_invariant_broken(overrides: dict) -> None:
    with pytest.raises(InvalidWitnessConfigError):
        create_config(**overrides)


def test_supports_separation_requires_primes_above_twice_the_carrier() -> None:
    assert not create_config(primes=(3, 5), length=15).supports_separation()


def test_claim_record_serializes_passed_as_pass() -> None:
    record = ClaimRecord(claim="2", passed=True)

    assert record.dict(by_alias=True)["pass"] is True
    assert ClaimRecord(claim="2", **{"pass": False}).passed is False


def test_claim_report_lists_failed_records() -> None:
    records = [ClaimRecord(claim="1(i)", passed=True),
               ClaimRecord(claim="5", passed=None),
               ClaimRecord(claim="2", passed=False)]
    report = ClaimReport(algebra="chain", primes=(7,), length=7, f_min=(0, 0, 1), reorder=(2, 0, 1), records=records)

    assert [record.claim for record in report.failed] == ["2"]
    assert not report.all_passed
