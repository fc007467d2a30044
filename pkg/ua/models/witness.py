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

from typing import Any, Dict, List, Optional, Tuple

from pydantic import Field, root_validator

from ua.models.algebra import Table, UnaryAlgebra
from ua.models.errors import InvalidWitnessConfigError
from ua.models.pydantic import WrappedBaseModel


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


class WitnessConfig(WrappedBaseModel):
    """The parameters of the witness family of subdirect powers of an algebra of uncountable type.

    reorder lists the carrier as a_1, ..., a_n, with the last two elements merged by f_min.
    length is the size of the index set, the product of the primes.
    """
    algebra: UnaryAlgebra
    f_min: Table
    reorder: Tuple[int, ...]
    primes: Tuple[int, ...]
    length: int

    @root_validator(skip_on_failure=True)
    def _check_invariants(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        algebra, f_min, reorder, primes = values["algebra"], values["f_min"], values["reorder"], values["primes"]
        carrier_size = algebra.carrier_size

        if sorted(reorder) != list(range(carrier_size)):
            raise InvalidWitnessConfigError(f"{list(reorder)} is not an ordering of the carrier")
        if len(f_min) != carrier_size or f_min[reorder[-2]] != f_min[reorder[-1]]:
            raise InvalidWitnessConfigError("f_min must merge the last two elements of the ordering")

        if len(primes) == 0:
            raise InvalidWitnessConfigError("At least one prime is required")
        for prime in primes:
            if not is_prime(prime):
                raise InvalidWitnessConfigError(f"{prime} is not a prime")
            if prime < carrier_size:
                raise InvalidWitnessConfigError(f"Prime {prime} is smaller than the carrier size {carrier_size}")
        if any(first >= second for first, second in zip(primes, primes[1:])):
            raise InvalidWitnessConfigError(f"Primes must be strictly increasing, got {list(primes)}")

        product = 1
        for prime in primes:
            product *= prime
        if values["length"] != product:
            raise InvalidWitnessConfigError(f"The index set size must be {product}, got {values['length']}")

        return values

    @property
    def carrier_size(self) -> int:
        return self.algebra.carrier_size

    def supports_separation(self) -> bool:
        """Returns whether every prime exceeds twice the carrier size, as the non-isomorphism argument needs."""
        return all(prime > 2 * self.carrier_size for prime in self.primes)


class ClaimRecord(WrappedBaseModel):
    """The outcome of one mechanical check. passed is None for a skipped check."""
    claim: str
    params: Dict[str, Any] = {}
    computed: Any = None
    expected: Any = None
    passed: Optional[bool] = Field(None, alias="pass")
    method: Optional[str] = None
    note: Optional[str] = None

    class Config:
        allow_population_by_field_name = True


class ClaimReport(WrappedBaseModel):
    algebra: str
    primes: Tuple[int, ...]
    length: int
    f_min: Table
    reorder: Tuple[int, ...]
    records: List[ClaimRecord]

    @property
    def failed(self) -> List[ClaimRecord]:
        return [record for record in self.records if record.passed is False]

    @property
    def all_passed(self) -> bool:
        return len(self.failed) == 0
