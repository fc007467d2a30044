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

from typing import Iterable, List, Sequence

from ua.constants import DEFAULT_CARRIER_CAP, DEFAULT_ELEMENT_CAP
from ua.components.algebra.algebra_core import min_image_nonconstant
from ua.components.powers.powers import full_diagonal, generate_subpower
from ua.models.algebra import UnaryAlgebra
from ua.models.errors import IndexRangeError, InvalidWitnessConfigError, NotDivisibleError
from ua.models.powers import IndexPartition, PowerTuple, Subpower
from ua.models.witness import WitnessConfig


def make_witness_config(algebra: UnaryAlgebra,
                        primes: Sequence[int],
                        cap: int = DEFAULT_CARRIER_CAP) -> WitnessConfig:
    """Computes f_min and the carrier ordering of an algebra of uncountable type.

    The lexicographically least pair a < b with f_min(a) = f_min(b) is moved to the end of the ordering,
    the remaining elements keep their increasing order.

    :param algebra: the algebra, which must be of uncountable type
    :param primes: the strictly increasing primes indexing the family
    :param cap: the carrier cap of monoid generation
    :raises NotUncountableError: if the algebra is of countable type
    """
    f_min = min_image_nonconstant(algebra, cap=cap)

    merged = next((first, second)
                  for first in range(algebra.carrier_size)
                  for second in range(first + 1, algebra.carrier_size)
                  if f_min[first] == f_min[second])
    reorder = tuple(element for element in range(algebra.carrier_size) if element not in merged) + merged

    length = 1
    for prime in primes:
        length *= prime

    return WitnessConfig(algebra=algebra, f_min=f_min, reorder=reorder, primes=tuple(primes), length=length)


def sigma(modulus: int, length: int) -> IndexPartition:
    """Returns the residue classes modulo modulus on the positions 0..length-1.

    :raises NotDivisibleError: if modulus does not divide length
    """
    if modulus < 1 or length % modulus != 0:
        raise NotDivisibleError(modulus, length)
    return IndexPartition.construct(size=length,
                                    blocks=tuple(tuple(range(residue, length, modulus)) for residue in range(modulus)))


def _check_prime(config: WitnessConfig, prime: int) -> None:
    if prime not in config.primes:
        raise InvalidWitnessConfigError(f"{prime} is not one of the configured primes {list(config.primes)}")


def build_t(config: WitnessConfig, prime: int, level: int) -> PowerTuple:
    """Returns the generator t_{p,l} of T_p.

    With blocks C_1, ..., C_p of sigma(p), positions in C_i get a_i for i <= n-2,
    positions in C_(n-1) up to C_(n-1+l) get a_(n-1) and the remaining positions get a_n.

    :raises IndexRangeError: if level is not in 0..p-n
    """
    _check_prime(config, prime)

    carrier_size = config.carrier_size
    if not 0 <= level <= prime - carrier_size:
        raise IndexRangeError(f"Level {level} is not in 0..{prime - carrier_size}")

    block_values = []
    for block in range(prime):
        if block <= carrier_size - 3:
            block_values.append(config.reorder[block])
        elif block <= carrier_size - 2 + level:
            block_values.append(config.reorder[carrier_size - 2])
        else:
            block_values.append(config.reorder[carrier_size - 1])

    return tuple(block_values[position % prime] for position in range(config.length))


def generators_of_t(config: WitnessConfig, prime: int) -> List[PowerTuple]:
    return [build_t(config, prime, level) for level in range(prime - config.carrier_size + 1)]


def build_T(config: WitnessConfig, prime: int, cap: int = DEFAULT_ELEMENT_CAP) -> Subpower:
    """Returns T_p, the subpower generated by the tuples t_{p,0}, ..., t_{p,p-n}."""
    return generate_subpower(config.algebra, config.length, generators_of_t(config, prime), cap=cap)


def build_S(config: WitnessConfig, primes: Iterable[int], cap: int = DEFAULT_ELEMENT_CAP) -> Subpower:
    """Returns S_K, the union of the full diagonal with T_p for every p in K."""
    subpower = full_diagonal(config.algebra, config.length)
    for prime in primes:
        subpower = subpower.union(build_T(config, prime, cap=cap))
    return subpower
