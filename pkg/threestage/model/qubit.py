# -*- coding: utf-8 -*-

# Copyright threestage developers
# Distributed under the terms of the GNU General Public License

# --------------------------------------------------------------------
# threestage is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# threestage is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with threestage.  If not, see <http://www.gnu.org/licenses/>.
# --------------------------------------------------------------------

"""

Single-qubit state-vector algebra

States and unitaries are immutable values backed by read-only numpy
arrays. Constructors validate their invariants and never repair input:
a state whose norm deviates from 1 by more than :data:`NORM_TOL` or a
matrix that is not unitary within :data:`UNITARY_TOL` is rejected.

Equality of states up to global phase is expressed with :func:`fidelity`;
``==`` compares amplitudes exactly.

**Provides**

 * :class:`Qubit`
 * :class:`Unitary2`
 * :class:`SecretTransform`
 * :func:`make_qubit`
 * :func:`identity`
 * :func:`pauli_z`
 * :func:`rotation`
 * :func:`apply`
 * :func:`adjoint`
 * :func:`compose`
 * :func:`commutator_norm`
 * :func:`inner`
 * :func:`measure`
 * :func:`fidelity`
 * :func:`orthogonal_complement`
 * :func:`random_qubit`
 * :func:`random_unitary`

"""

from dataclasses import dataclass
import math
from typing import TYPE_CHECKING, Optional, Tuple

import numpy

try:
    from threestage.lib.exceptions import (
        DegenerateBasis, NonFiniteInput, NotNormalized, NotUnitary)
    from threestage.lib.prng import RngStream
    from threestage.lib.typechecks import check_finite
except ImportError:
    from lib.exceptions import (
        DegenerateBasis, NonFiniteInput, NotNormalized, NotUnitary)
    from lib.prng import RngStream
    from lib.typechecks import check_finite

if TYPE_CHECKING:
    from threestage.model.encoding import OrthogonalPair

NORM_TOL = 1e-9
"""Maximum deviation of a state norm from 1"""

UNITARY_TOL = 1e-9
"""Maximum entrywise deviation of U†U from the identity"""

EIGEN_TOL = 1e-12
"""Born probabilities this close to 0 or 1 are taken as exact"""


def _frozen(array: numpy.ndarray) -> numpy.ndarray:
    """Returns a read-only complex copy of array"""

    array = numpy.array(array, dtype=numpy.complex128)
    array.setflags(write=False)
    return array


class Qubit:
    """Pure single-qubit state amp0|0⟩ + amp1|1⟩"""

    __slots__ = ("_vector",)

    def __init__(self, amp0: complex, amp1: complex):
        """
        :param amp0: Amplitude of |0⟩
        :param amp1: Amplitude of |1⟩

        """

        check_finite(amp0, amp1)

        vector = _frozen([amp0, amp1])
        norm = float(numpy.vdot(vector, vector).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"State norm² is {norm!r}, not 1")

        object.__setattr__(self, "_vector", vector)

    def __setattr__(self, key, value):
        raise AttributeError("Qubit is immutable")

    @classmethod
    def from_vector(cls, vector) -> "Qubit":
        """Returns state from a length 2 amplitude sequence"""

        amp0, amp1 = vector
        return cls(amp0, amp1)

    @property
    def amp0(self) -> complex:
        """Amplitude of |0⟩"""

        return complex(self._vector[0])

    @property
    def amp1(self) -> complex:
        """Amplitude of |1⟩"""

        return complex(self._vector[1])

    @property
    def vector(self) -> numpy.ndarray:
        """Read-only amplitude array"""

        return self._vector

    @property
    def probabilities(self) -> Tuple[float, float]:
        """Computational basis outcome probabilities"""

        p0, p1 = numpy.abs(self._vector) ** 2
        return float(p0), float(p1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Qubit):
            return NotImplemented
        return bool(numpy.array_equal(self._vector, other._vector))

    def __hash__(self) -> int:
        return hash((self.amp0, self.amp1))

    def __repr__(self) -> str:
        return f"Qubit({self.amp0!r}, {self.amp1!r})"

    def __reduce__(self):
        return Qubit, (self.amp0, self.amp1)


class Unitary2:
    """Unitary 2×2 complex matrix"""

    __slots__ = ("_matrix",)

    def __init__(self, matrix):
        """
        :param matrix: Nested 2×2 sequence or array, row-major

        """

        matrix = _frozen(matrix)
        if matrix.shape != (2, 2):
            raise ValueError(f"Matrix shape {matrix.shape} is not (2, 2)")
        check_finite(*matrix.flat)

        deviation = numpy.abs(matrix.conj().T @ matrix - numpy.eye(2)).max()
        if deviation > UNITARY_TOL:
            raise NotUnitary(f"U†U deviates from I by {deviation!r}")

        object.__setattr__(self, "_matrix", matrix)

    def __setattr__(self, key, value):
        raise AttributeError("Unitary2 is immutable")

    @property
    def matrix(self) -> numpy.ndarray:
        """Read-only matrix array"""

        return self._matrix

    @property
    def m00(self) -> complex:
        return complex(self._matrix[0, 0])

    @property
    def m01(self) -> complex:
        return complex(self._matrix[0, 1])

    @property
    def m10(self) -> complex:
        return complex(self._matrix[1, 0])

    @property
    def m11(self) -> complex:
        return complex(self._matrix[1, 1])

    def allclose(self, other: "Unitary2", atol: float = UNITARY_TOL) -> bool:
        """True if all entries agree within atol"""

        return bool(numpy.abs(self._matrix - other._matrix).max() <= atol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Unitary2):
            return NotImplemented
        return bool(numpy.array_equal(self._matrix, other._matrix))

    def __hash__(self) -> int:
        return hash(tuple(complex(entry) for entry in self._matrix.flat))

    def __repr__(self) -> str:
        rows = self._matrix.tolist()
        return f"Unitary2({rows!r})"

    def __reduce__(self):
        return Unitary2, (self._matrix.tolist(),)


def make_qubit(amp0: complex, amp1: complex) -> Qubit:
    """Returns the state amp0|0⟩ + amp1|1⟩

    :param amp0: Amplitude of |0⟩
    :param amp1: Amplitude of |1⟩
    :return: Validated state, raises NotNormalized if the norm is off

    """

    return Qubit(amp0, amp1)


def identity() -> Unitary2:
    """Returns the 2×2 identity"""

    return Unitary2(numpy.eye(2))


def pauli_z() -> Unitary2:
    """Returns diag(1, -1), which does not commute with rotations"""

    return Unitary2([[1, 0], [0, -1]])


def rotation(theta: float) -> Unitary2:
    """Returns the real rotation [[cos θ, −sin θ], [sin θ, cos θ]]

    :param theta: Rotation angle in radians

    """

    theta = float(theta)
    if not math.isfinite(theta):
        raise NonFiniteInput(f"Rotation angle {theta} is not finite")

    cos, sin = math.cos(theta), math.sin(theta)
    return Unitary2([[cos, -sin], [sin, cos]])


def apply(u: Unitary2, q: Qubit) -> Qubit:
    """Returns the state u|q⟩"""

    return Qubit.from_vector(u.matrix @ q.vector)


def adjoint(u: Unitary2) -> Unitary2:
    """Returns the conjugate transpose u†"""

    return Unitary2(u.matrix.conj().T)


def compose(u: Unitary2, v: Unitary2) -> Unitary2:
    """Returns the matrix product u·v, i.e. v is applied first"""

    return Unitary2(u.matrix @ v.matrix)


def commutator_norm(u: Unitary2, v: Unitary2) -> float:
    """Returns the Frobenius norm of uv − vu

    Zero iff u and v commute, i.e. iff the pair can serve as the secret
    transforms of Alice and Bob.

    """

    commutator = u.matrix @ v.matrix - v.matrix @ u.matrix
    return float(numpy.linalg.norm(commutator))


def inner(a: Qubit, b: Qubit) -> complex:
    """Returns ⟨a|b⟩"""

    return complex(numpy.vdot(a.vector, b.vector))


def measure(q: Qubit, basis: "OrthogonalPair",
            rng: RngStream) -> Tuple[int, Qubit]:
    """Projective measurement of q in the basis of an orthogonal pair

    Consumes exactly one uniform variate of rng.

    :param q: State to be measured
    :param basis: Pair whose state0/state1 are the outcomes 0/1
    :param rng: Random stream
    :return: Outcome bit and the collapsed state

    """

    state0, state1 = basis.state0, basis.state1

    overlap = abs(inner(state0, state1))
    if overlap > NORM_TOL:
        raise DegenerateBasis(f"Basis overlap |⟨0|1⟩| is {overlap!r}")

    p0 = abs(inner(state0, q)) ** 2
    if p0 > 1.0 - EIGEN_TOL:
        p0 = 1.0
    elif p0 < EIGEN_TOL:
        p0 = 0.0

    if rng.random() < p0:
        return 0, state0
    return 1, state1


def fidelity(a: Qubit, b: Qubit) -> float:
    """Returns |⟨a|b⟩|², 1 iff the states agree up to global phase"""

    return min(abs(inner(a, b)) ** 2, 1.0)


def orthogonal_complement(q: Qubit) -> Qubit:
    """Returns the state orthogonal to q, −conj(amp1)|0⟩ + conj(amp0)|1⟩"""

    return Qubit(-q.amp1.conjugate(), q.amp0.conjugate())


def random_qubit(rng: RngStream) -> Qubit:
    """Returns a Haar-random pure state

    Amplitudes are two independent standard complex Gaussians, normalized.

    """

    re0, im0, re1, im1 = rng.standard_normal(4)
    amps = numpy.array([complex(re0, im0), complex(re1, im1)])
    return Qubit.from_vector(amps / numpy.linalg.norm(amps))


def random_unitary(rng: RngStream) -> Unitary2:
    """Returns a Haar-random 2×2 unitary"""

    gaussian = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = numpy.linalg.qr(gaussian)
    diagonal = numpy.diag(r)
    return Unitary2(q * (diagonal / numpy.abs(diagonal)))


@dataclass(frozen=True)
class SecretTransform:
    """A party's secret unitary, with its angle when it is a rotation"""

    unitary: Unitary2
    angle: Optional[float] = None

    def __post_init__(self):
        if self.angle is not None and \
           not self.unitary.allclose(rotation(self.angle)):
            raise ValueError(f"Unitary is not rotation({self.angle})")

    @classmethod
    def from_angle(cls, theta: float) -> "SecretTransform":
        """Returns the rotation transform R(theta)"""

        return cls(rotation(theta), float(theta))

    @classmethod
    def random_rotation(cls, rng: RngStream) -> "SecretTransform":
        """Returns R(theta) with theta uniform in [0, 2π)"""

        return cls.from_angle(rng.uniform(0.0, 2.0 * math.pi))

    @property
    def adjoint(self) -> Unitary2:
        """Inverse of the transform"""

        return adjoint(self.unitary)


KET_ZERO = Qubit(1, 0)
KET_ONE = Qubit(0, 1)
KET_PLUS = Qubit(math.sqrt(0.5), math.sqrt(0.5))
KET_MINUS = Qubit(math.sqrt(0.5), -math.sqrt(0.5))
