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

from typing import Optional


class UnaryAlgebraError(Exception):
    """The base class of every error raised by the ua package."""


class CapacityError(UnaryAlgebraError):
    """A CapacityError indicates that a computation would exceed one of the configured caps."""

    def __init__(self, what: str, size: int, cap: int, option: str) -> None:
        """Creates a new CapacityError instance.

        :param what: a description of the computation that was refused
        :param size: the size the computation would reach
        :param cap: the configured cap that was exceeded
        :param option: the name of the configurable option controlling the cap
        """
        super().__init__(f"{what} ({size:,}) exceeds the configured cap of {cap:,}, "
                         f"raise it using `ua config set {option} <value>`")

        self.size = size
        self.cap = cap
        self.option = option


class AlgebraFormatError(UnaryAlgebraError):
    """An AlgebraFormatError indicates that a text document could not be parsed."""

    def __init__(self, line: Optional[int], reason: str, source: Optional[str] = None) -> None:
        """Creates a new AlgebraFormatError instance.

        :param line: the 1-based line number the problem was found on, None if it concerns the whole document
        :param reason: a description of the problem
        :param source: the name of the file that was parsed, if any
        """
        location = source or "<input>"
        if line is not None:
            location += f":{line}"

        super().__init__(f"{location}: {reason}")

        self.line = line
        self.reason = reason
        self.source = source


class InvalidAlgebraError(UnaryAlgebraError):
    """An InvalidAlgebraError indicates that an algebra (or a map on its carrier) breaks one of its invariants."""


class UnknownOpError(UnaryAlgebraError):
    """An UnknownOpError indicates that an operation name does not exist in an algebra."""

    def __init__(self, op_name: str) -> None:
        super().__init__(f"Unknown operation '{op_name}'")
        self.op_name = op_name


class NotUncountableError(UnaryAlgebraError):
    """A NotUncountableError indicates that an operation requires an algebra of uncountable type."""

    def __init__(self, algebra_name: Optional[str]) -> None:
        super().__init__(f"Algebra '{algebra_name or 'unnamed'}' is of countable type, "
                         f"every basic operation is a bijection or a constant map")


class NoBottomError(UnaryAlgebraError):
    """A NoBottomError indicates that a connected algebra has no unique minimal strongly connected component."""


class NotConnectedError(UnaryAlgebraError):
    """A NotConnectedError indicates that an algebra has more than one connected component."""


class OpSignatureMismatchError(UnaryAlgebraError):
    """An OpSignatureMismatchError indicates that two algebras do not share the same operation names."""


class EmptySubpowerError(UnaryAlgebraError):
    """An EmptySubpowerError indicates that an operation requires a nonempty subpower."""


class NotDivisibleError(UnaryAlgebraError):
    """A NotDivisibleError indicates that a modulus does not divide the size of the index set."""

    def __init__(self, modulus: int, length: int) -> None:
        super().__init__(f"{modulus} does not divide the index set size {length}")


class IndexRangeError(UnaryAlgebraError):
    """An IndexRangeError indicates that an index parameter lies outside its allowed range."""


class EmptyInputError(UnaryAlgebraError):
    """An EmptyInputError indicates that an operation received an empty sequence."""


class LengthMismatchError(UnaryAlgebraError):
    """A LengthMismatchError indicates that tuples have different lengths than required."""


class InvalidTupleError(UnaryAlgebraError):
    """An InvalidTupleError indicates that a tuple literal is malformed or has entries outside the carrier."""


class NotChainAlgebraError(UnaryAlgebraError):
    """A NotChainAlgebraError indicates that an operation requires the three-element chain algebra."""


class InvalidFieldOfSetsError(UnaryAlgebraError):
    """An InvalidFieldOfSetsError indicates that a family of subsets is not a field of sets."""


class InvalidWitnessConfigError(UnaryAlgebraError):
    """An InvalidWitnessConfigError indicates that a witness configuration breaks one of its invariants."""


class SearchTimeoutError(UnaryAlgebraError):
    """A SearchTimeoutError indicates that an isomorphism search ran past its deadline."""
