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

from collections import Counter
from unittest import mock

from tests.test_helpers import algebra
from ua.components.casebook.casebook import chain_algebra
from ua.components.witness.claim_verifier import ClaimVerifier
from ua.components.witness.witness import make_witness_config
from ua.models.errors import SearchTimeoutError


def create_verifier() -> ClaimVerifier:
    return ClaimVerifier(mock.Mock())


def test_verify_claims_passes_for_chain() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11]))

    assert report.all_passed
    assert report.length == 77
    assert Counter(record.claim for record in report.records) == Counter({"1(i)": 2,
                                                                           "1(ii)": 1,
                                                                           "1(iii)": 1,
                                                                           "format-refinement": 2,
                                                                           "fmin-collapse": 2,
                                                                           "2": 2,
                                                                           "2-generators": 2,
                                                                           "3": 2,
                                                                           "4": 2,
                                                                           "subdirect": 1,
                                                                           "5": 6})


def test_verify_claims_reports_top_component_counts() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11]))

    records = [record for record in report.records if record.claim == "2"]

    assert [record.computed for record in records] == [5, 9]
    assert [record.expected for record in records] == [5, 9]


def test_verify_claims_reports_intersection_sizes() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11]))

    records = [record for record in report.records if record.claim == "3"]

    assert [record.params for record in records] == [{"p": 7, "q": 11}, {"p": 11, "q": 7}]
    assert all(record.computed == {"T_p & T_q": 1, "T_p & D": 1} for record in records)
    assert all(record.expected == {"D_0": 1} for record in records)


def test_verify_claims_compares_every_pair_of_subsets() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11, 13]))

    records = [record for record in report.records if record.claim == "5"]

    assert len(records) == 28
    assert all(record.passed for record in records)
    assert all(record.method == "search" for record in records)
    assert all(record.computed["search"] == "not isomorphic" for record in records)


def test_verify_claims_limits_subset_size() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11, 13]), subsets_max=1)

    assert len([record for record in report.records if record.claim == "5"]) == 6


def test_verify_claims_skips_separation_for_small_primes() -> None:
    report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [3, 5]))

    records = [record for record in report.records if record.claim == "5"]

    assert len(records) == 1
    assert records[0].passed is None
    assert records[0].method == "skipped"
    assert "2n = 6" in records[0].note
    assert report.all_passed


def test_verify_claims_falls_back_to_invariant_on_timeout() -> None:
    with mock.patch("ua.components.witness.claim_verifier.are_isomorphic",
                    side_effect=SearchTimeoutError("timeout")):
        report = create_verifier().verify_claims(make_witness_config(chain_algebra(), [7, 11]))

    records = [record for record in report.records if record.claim == "5"]

    assert all(record.method == "invariant" for record in records)
    assert all(record.computed["invariant"] == "distinct" for record in records)
    assert all(record.passed for record in records)


def test_verify_claims_reports_failure_without_raising() -> None:
    config = make_witness_config(chain_algebra(), [7, 11])

    with mock.patch("ua.components.witness.claim_verifier.are_isomorphic", return_value=[0]):
        report = create_verifier().verify_claims(config)

    assert not report.all_passed
    assert {record.claim for record in report.failed} == {"5"}


def test_verify_claims_passes_for_idempotent_algebra() -> None:
    report = create_verifier().verify_claims(make_witness_config(algebra(4, g=(0, 0, 2, 2)), [11, 13]), threads=2)

    assert report.all_passed
