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
test_qubit
==========

Unit tests for qubit.py

"""

import math
import pickle

import numpy
import pytest

from ...lib.exceptions import (DegenerateBasis, NonFiniteInput,
                               NotNormalized, NotUnitary)
from ...lib.prng import make_stream
from ..encoding import COMPUTATIONAL, HADAMARD, OrthogonalPair
from ..qubit import (
    KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO, Qubit, SecretTransform, Unitary2,
    adjoint, apply, commutator_norm, compose, fidelity, identity, inner,
    make_qubit, measure, orthogonal_complement, pauli_z, random_qubit,
    random_unitary, rotation)

SQRT_HALF = 1 / math.sqrt(2)


def states_close(a, b, atol=1e-12):
    return numpy.allclose(a.vector, b.vector, rtol=0, atol=atol)


param_test_make_qubit = [
    ((1 + 0j, 0j), (1, 0), None),
    ((SQRT_HALF, SQRT_HALF), (SQRT_HALF, SQRT_HALF), None),
    ((0.6, 0.8j), (0.6, 0.8j), None),
    ((0.9, 0.5), None, NotNormalized),
    ((0, 0), None, NotNormalized),
    ((math.nan, 1), None, NonFiniteInput),
    ((1, math.inf), None, NonFiniteInput),
]


@pytest.mark.parametrize("amps, res, error", param_test_make_qubit)
def test_make_qubit(amps, res, error):
    """Unit test for make_qubit"""

    if error is not None:
        with pytest.raises(error):
            make_qubit(*amps)
    else:
        q = make_qubit(*amps)
        assert (q.amp0, q.amp1) == pytest.approx(res)


def test_qubit_immutable():
    """States cannot be changed after construction"""

    q = make_qubit(1, 0)

    with pytest.raises(AttributeError):
        q.amp0 = 0
    with pytest.raises(ValueError):
        q.vector[0] = 0


def test_qubit_value_semantics():
    """Equal amplitudes give equal, hashable and picklable states"""

    q = make_qubit(0.6, 0.8)

    assert q == Qubit(0.6, 0.8)
    assert q != Qubit(0.8, 0.6)
    assert len({q, Qubit(0.6, 0.8)}) == 1
    assert pickle.loads(pickle.dumps(q)) == q


param_test_unitary_errors = [
    ([[1, 1], [0, 1]], NotUnitary),
    ([[2, 0], [0, 0.5]], NotUnitary),
    ([[1, 0, 0], [0, 1, 0]], ValueError),
    ([[math.nan, 0], [0, 1]], NonFiniteInput),
]


@pytest.mark.parametrize("matrix, error", param_test_unitary_errors)
def test_unitary_errors(matrix, error):
    """Unit test for Unitary2 validation"""

    with pytest.raises(error):
        Unitary2(matrix)


def test_rotation():
    """Unit test for rotation"""

    assert rotation(0) == identity()
    assert states_close(apply(rotation(math.pi / 2), KET_ZERO), KET_ONE)
    assert states_close(apply(rotation(math.pi / 4), KET_ZERO),
                        Qubit(SQRT_HALF, SQRT_HALF))

    with pytest.raises(NonFiniteInput):
        rotation(math.inf)


def test_apply():
    """Unit test for apply"""

    assert apply(identity(), KET_PLUS) == KET_PLUS
    assert states_close(apply(rotation(0.7), KET_ONE),
                        Qubit(-math.sin(0.7), math.cos(0.7)))


def test_adjoint():
    """Unit test for adjoint"""

    rng = make_stream(5)

    assert adjoint(identity()) == identity()
    for theta in (0.3, 1.7, -2.2):
        assert adjoint(rotation(theta)).allclose(rotation(-theta), 1e-15)

    u = random_unitary(rng)
    assert adjoint(adjoint(u)) == u
    assert compose(adjoint(u), u).allclose(identity())


def test_compose():
    """Unit test for compose"""

    u = random_unitary(make_stream(6))

    assert compose(u, identity()).allclose(u, 1e-15)
    assert compose(rotation(0.7), rotation(1.3)).allclose(rotation(2.0),
                                                         1e-12)


def test_group_law_and_commutativity():
    """Rotations form a commutative group over many random angles"""

    rng = make_stream(2024)

    for theta, phi in rng.uniform(-10, 10, (1000, 2)):
        u, v = rotation(theta), rotation(phi)
        assert commutator_norm(u, v) <= 1e-12
        assert compose(u, v).allclose(rotation(theta + phi), 1e-12)


param_test_commutator_norm = [
    (rotation(0.4), identity(), lambda norm: norm == 0),
    (rotation(0.4), rotation(1.1), lambda norm: norm <= 1e-12),
    (rotation(math.pi / 4), pauli_z(), lambda norm: norm > 0.1),
    (pauli_z(), identity(), lambda norm: norm == 0),
]


@pytest.mark.parametrize("u, v, check", param_test_commutator_norm)
def test_commutator_norm(u, v, check):
    """Unit test for commutator_norm"""

    assert check(commutator_norm(u, v))


param_test_fidelity = [
    (KET_PLUS, KET_PLUS, 1.0),
    (KET_ZERO, KET_ONE, 0.0),
    (KET_ZERO, KET_PLUS, 0.5),
    (KET_MINUS, Qubit(-SQRT_HALF, SQRT_HALF), 1.0),
    (Qubit(1j, 0), KET_ZERO, 1.0),
]


@pytest.mark.parametrize("a, b, res", param_test_fidelity)
def test_fidelity(a, b, res):
    """Unit test for fidelity"""

    assert fidelity(a, b) == pytest.approx(res, abs=1e-15)


def test_inner():
    """Unit test for inner, which conjugates its first argument"""

    assert inner(Qubit(1j, 0), KET_ZERO) == pytest.approx(-1j)
    assert inner(KET_PLUS, KET_MINUS) == pytest.approx(0)


param_test_measure_eigenstates = [
    (KET_ZERO, COMPUTATIONAL, 0),
    (KET_ONE, COMPUTATIONAL, 1),
    (KET_PLUS, HADAMARD, 0),
    (KET_MINUS, HADAMARD, 1),
]


@pytest.mark.parametrize("q, basis, res", param_test_measure_eigenstates)
def test_measure_eigenstates(q, basis, res):
    """Eigenstates are measured with certainty and stay unchanged"""

    rng = make_stream(11)

    for _ in range(100):
        bit, collapsed = measure(q, basis, rng)
        assert bit == res
        assert collapsed == basis[res]


def test_measure_born_rule():
    """Outcome frequency of R(π/4)|0⟩ is 1/2 within 3 sigma"""

    rng = make_stream(12)
    q = apply(rotation(math.pi / 4), KET_ZERO)
    trials = 100000

    zeros = sum(measure(q, COMPUTATIONAL, rng)[0] == 0
                for _ in range(trials))

    sigma = math.sqrt(trials * 0.25)
    assert abs(zeros - trials / 2) <= 3 * sigma


def test_measure_consumes_one_variate():
    """A measurement draws exactly one uniform number"""

    rng = make_stream(13)
    reference = make_stream(13)

    measure(KET_PLUS, COMPUTATIONAL, rng)
    reference.random()

    assert rng.random() == reference.random()


def test_measure_degenerate_basis():
    """Non-orthogonal bases are rejected"""

    # Bypass the pair validation
    basis = object.__new__(OrthogonalPair)
    object.__setattr__(basis, "state0", KET_ZERO)
    object.__setattr__(basis, "state1", KET_PLUS)

    with pytest.raises(DegenerateBasis):
        measure(KET_ZERO, basis, make_stream(0))


def test_orthogonal_complement():
    """Unit test for orthogonal_complement"""

    rng = make_stream(14)

    for _ in range(100):
        q = random_qubit(rng)
        assert abs(inner(q, orthogonal_complement(q))) < 1e-12


def test_random_qubit():
    """Haar-random states are normalized, reproducible and uniform"""

    rng = make_stream(15)
    samples = 100000

    p0 = numpy.array([random_qubit(rng).probabilities[0]
                      for _ in range(samples)])

    # |amp0|² is uniform on [0, 1]
    sigma = math.sqrt(1 / 12 / samples)
    assert abs(p0.mean() - 0.5) <= 3 * sigma

    assert random_qubit(make_stream(1)) == random_qubit(make_stream(1))


def test_random_unitary():
    """Haar-random unitaries are unitary and reproducible"""

    rng = make_stream(16)

    for _ in range(100):
        u = random_unitary(rng)
        assert compose(adjoint(u), u).allclose(identity())

    assert random_unitary(make_stream(2)) == random_unitary(make_stream(2))


class TestSecretTransform:
    """Unit tests for SecretTransform"""

    def test_from_angle(self):
        transform = SecretTransform.from_angle(0.5)

        assert transform.angle == 0.5
        assert transform.unitary == rotation(0.5)
        assert transform.adjoint.allclose(rotation(-0.5), 1e-15)

    def test_random_rotation_range(self):
        rng = make_stream(17)
        angles = [SecretTransform.random_rotation(rng).angle
                  for _ in range(1000)]

        assert all(0 <= angle < 2 * math.pi for angle in angles)

    def test_angle_mismatch(self):
        with pytest.raises(ValueError):
            SecretTransform(rotation(0.5), 0.6)


def test_norm_preservation_and_inversion():
    """Unitaries keep the norm and their adjoints undo them"""

    rng = make_stream(18)

    for _ in range(1000):
        u = random_unitary(rng)
        q = random_qubit(rng)

        moved = apply(u, q)

        assert abs(numpy.linalg.norm(moved.vector) - 1) <= 1e-12
        assert fidelity(apply(adjoint(u), moved), q) >= 1 - 1e-12
