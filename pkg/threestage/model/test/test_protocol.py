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
test_protocol
=============

Unit tests for protocol.py

"""

import math

import numpy
import pytest

from ...lib.exceptions import (NonCommutingTransforms, StageOrderViolation,
                               WrongRole)
from ...lib.prng import make_stream
from ..channel import AdversarialChannel, InterceptResend, Substitute
from ..encoding import COMPUTATIONAL, HADAMARD, FrameSpec, general_pair
from ..protocol import (
    AnglePolicy, KeyDistOutcome, PartyState, Role, SessionConfig, Status,
    alice_stage1, alice_stage3, authority_issue, bob_stage2, bob_stage4,
    check_commuting, keydist_round, run_key_distribution, run_three_stage)
from ..qubit import (KET_ONE, KET_ZERO, Qubit, SecretTransform, apply,
                     fidelity, identity, pauli_z, random_qubit, rotation)


def states_close(a, b, atol=1e-12):
    return numpy.allclose(a.vector, b.vector, rtol=0, atol=atol)


def parties(theta, phi, pair=COMPUTATIONAL):
    return (PartyState(Role.ALICE, SecretTransform.from_angle(theta), pair),
            PartyState(Role.BOB, SecretTransform.from_angle(phi), pair))


param_test_alice_stage1 = [
    (KET_ZERO, 0, KET_ZERO),
    (KET_ZERO, math.pi / 2, KET_ONE),
    (KET_ONE, 0.7, Qubit(-math.sin(0.7), math.cos(0.7))),
]


@pytest.mark.parametrize("x, theta, res", param_test_alice_stage1)
def test_alice_stage1(x, theta, res):
    """Unit test for alice_stage1"""

    alice, _ = parties(theta, 0)

    msg = alice_stage1(x, alice, 5, "s")

    assert msg.stage == 1
    assert msg.bit_index == 5
    assert msg.session_id == "s"
    assert states_close(msg.payload, res)


def test_bob_stage2():
    """Bob's rotation adds to Alice's"""

    alice, bob = parties(0.4, 1.1)

    msg = bob_stage2(alice_stage1(KET_ZERO, alice), bob)

    assert msg.stage == 2
    assert states_close(msg.payload, Qubit(math.cos(1.5), math.sin(1.5)))


def test_identity_transforms():
    """Identity transforms leave every payload unchanged"""

    alice, bob = parties(0, 0)
    x = random_qubit(make_stream(1))

    msg1 = alice_stage1(x, alice)
    msg2 = bob_stage2(msg1, bob)
    msg3 = alice_stage3(msg2, alice)

    assert msg1.payload == msg2.payload == msg3.payload == x
    assert bob_stage4(msg3, bob) == x


def test_stage3_is_bob_transform():
    """After stage 3 the qubit holds U_B(X) only"""

    rng = make_stream(2)

    for _ in range(1000):
        theta, phi = rng.uniform(0, 2 * math.pi, 2)
        alice, bob = parties(theta, phi)
        x = random_qubit(rng)

        msg3 = alice_stage3(bob_stage2(alice_stage1(x, alice), bob), alice)

        expected = apply(rotation(phi), x)
        assert fidelity(msg3.payload, expected) >= 1 - 1e-12


def test_stage3_non_commuting():
    """Without commuting transforms stage 3 does not hold U_B(X)"""

    alice = PartyState(Role.ALICE, SecretTransform.from_angle(math.pi / 4))
    bob = PartyState(Role.BOB, SecretTransform(pauli_z()))

    msg3 = alice_stage3(bob_stage2(alice_stage1(KET_ZERO, alice), bob), alice)

    assert fidelity(msg3.payload, apply(pauli_z(), KET_ZERO)) < 1
    assert fidelity(msg3.payload, KET_ONE) == pytest.approx(1, abs=1e-12)
    assert fidelity(bob_stage4(msg3, bob), KET_ZERO) == pytest.approx(
        0, abs=1e-12)


def test_full_round():
    """Bob recovers X for any angles"""

    rng = make_stream(3)

    for _ in range(200):
        theta, phi = rng.uniform(0, 2 * math.pi, 2)
        alice, bob = parties(theta, phi)
        msg = alice_stage3(bob_stage2(alice_stage1(KET_ZERO, alice), bob),
                           alice)
        assert fidelity(bob_stage4(msg, bob), KET_ZERO) >= 1 - 1e-12


class TestStageOrder:
    """Stage transitions are strictly 1, 2, 3, 4 per bit"""

    def setup_method(self):
        self.alice, self.bob = parties(0.3, 0.9)
        self.msg1 = alice_stage1(KET_ZERO, self.alice)

    def test_stage2_needs_stage1(self):
        msg2 = bob_stage2(self.msg1, self.bob)

        with pytest.raises(StageOrderViolation):
            bob_stage2(msg2, self.bob)

    def test_duplicate_stage1(self):
        with pytest.raises(StageOrderViolation):
            alice_stage1(KET_ZERO, self.alice)

    def test_replayed_stage1(self):
        bob_stage2(self.msg1, self.bob)

        with pytest.raises(StageOrderViolation):
            bob_stage2(self.msg1, self.bob)

    def test_stage4_needs_stage3(self):
        with pytest.raises(StageOrderViolation):
            bob_stage4(self.msg1, self.bob)

    def test_other_bits_independent(self):
        alice_stage1(KET_ONE, self.alice, bit_index=1)
        assert self.alice.cursor == {0: 1, 1: 1}

    def test_wrong_role(self):
        with pytest.raises(WrongRole):
            alice_stage1(KET_ZERO, self.bob, bit_index=2)
        with pytest.raises(WrongRole):
            bob_stage2(self.msg1, self.alice)


def test_check_commuting():
    """Non-commuting transforms are rejected"""

    alice = PartyState(Role.ALICE, SecretTransform.from_angle(math.pi / 4))
    bob = PartyState(Role.BOB, SecretTransform(pauli_z()))

    with pytest.raises(NonCommutingTransforms):
        check_commuting(alice, bob)

    bob.rekey(SecretTransform(identity()))
    check_commuting(alice, bob)


class TestAnglePolicy:
    """Unit tests for AnglePolicy"""

    def test_fixed(self):
        policy = AnglePolicy.fixed(0.2, 0.3)
        rng = make_stream(4)

        alice, bob = policy.transforms(rng)

        assert (alice.angle, bob.angle) == (0.2, 0.3)
        assert rng.random() == make_stream(4).random()

    def test_random(self):
        rng = make_stream(5)
        angles = {AnglePolicy.random().transforms(rng)[0].angle
                  for _ in range(10)}

        assert len(angles) == 10

    @pytest.mark.parametrize("mode, theta", [("spin", 0), ("fixed", math.nan)])
    def test_invalid(self, mode, theta):
        with pytest.raises(ValueError):
            AnglePolicy(mode, theta, 0)


def session(n=64, pair=COMPUTATIONAL, known=(1, 0) * 16, **kwargs):
    return SessionConfig(frame=FrameSpec(n, 8, known), pair=pair, **kwargs)


class TestRunThreeStage:
    """Unit tests for run_three_stage"""

    @pytest.mark.parametrize("pair", [COMPUTATIONAL, HADAMARD,
                                      general_pair(0.6, 0.8)])
    def test_clean_delivery(self, pair):
        rng = make_stream(6)
        data = rng.integers(0, 2, 64).tolist()

        transcript = run_three_stage(data, session(pair=pair), None, rng)

        assert transcript.status is Status.DELIVERED
        assert transcript.decoded_data == data
        assert transcript.bit_errors == 0
        assert transcript.is_complete
        assert len(transcript.messages) == 3 * len(transcript.frame)
        assert min(transcript.recovery_fidelities) >= 1 - 1e-12

    def test_general_pair_bit_one(self):
        cfg = session(n=8, pair=general_pair(0.6, 0.8))
        transcript = run_three_stage([1] * 8, cfg, None, make_stream(7))

        assert transcript.decoded_data == [1] * 8

    def test_identity_session(self):
        cfg = session(n=8, angles=AnglePolicy.fixed(0, 0))
        data = [1, 0, 0, 1, 1, 1, 0, 1]

        transcript = run_three_stage(data, cfg, None, make_stream(8))

        for msg in transcript.messages:
            assert msg.payload == COMPUTATIONAL[transcript.frame[msg.bit_index]]
        assert transcript.decoded == transcript.frame

    def test_passthrough_neutral(self):
        data = [0, 1] * 32

        clean = run_three_stage(data, session(), None, make_stream(9))
        passed = run_three_stage(data, session(), AdversarialChannel(),
                                 make_stream(9))

        assert clean.messages == passed.messages
        assert clean.decoded == passed.decoded

    def test_substitute_rejected(self):
        rng = make_stream(10)
        channel = AdversarialChannel(Substitute())

        for _ in range(100):
            channel.reset()
            data = rng.integers(0, 2, 64).tolist()
            transcript = run_three_stage(data, session(), channel, rng)
            assert transcript.status is Status.REJECTED
            assert not transcript.verdict.accepted

    def test_intercept_observed(self):
        channel = AdversarialChannel(InterceptResend(COMPUTATIONAL))
        transcript = run_three_stage([0] * 64, session(), channel,
                                     make_stream(11))

        assert len(transcript.observations) == len(transcript.frame)
        assert {obs.stage for obs in transcript.observations} == {1}

    def test_fixed_zero_angle_leaks(self):
        """Without angles Eve reads every bit at stage 1"""

        cfg = session(angles=AnglePolicy.fixed(0, 0))
        channel = AdversarialChannel(InterceptResend(COMPUTATIONAL))
        data = make_stream(12).integers(0, 2, 64).tolist()

        transcript = run_three_stage(data, cfg, channel, make_stream(13))

        outcomes = [obs.outcome for obs in transcript.observations]
        assert outcomes == transcript.frame

    def test_non_commuting_unitaries(self):
        cfg = session(n=8, alice_unitary=rotation(math.pi / 4),
                      bob_unitary=pauli_z())

        with pytest.raises(NonCommutingTransforms):
            run_three_stage([0] * 8, cfg, None, make_stream(14))

    def test_commuting_unitaries(self):
        cfg = session(n=8, alice_unitary=pauli_z(), bob_unitary=identity())
        rng = make_stream(15)

        transcript = run_three_stage([1, 0] * 4, cfg, None, rng)

        assert transcript.status is Status.DELIVERED

    def test_missing_frame(self):
        with pytest.raises(ValueError):
            run_three_stage([0], SessionConfig(), None, make_stream(0))


class TestKeyDistribution:
    """Unit tests for keydist_round and run_key_distribution"""

    def test_documented_angles(self):
        alice, bob = parties(0.4, 1.1)

        outcome = keydist_round(KET_ZERO, alice, bob)

        expected = Qubit(math.cos(1.5), math.sin(1.5))
        assert states_close(outcome.alice_state, expected)
        assert states_close(outcome.bob_state, expected)
        assert outcome.agreement_fidelity == pytest.approx(1, abs=1e-12)

    def test_identity(self):
        alice, bob = parties(0, 0)
        x = random_qubit(make_stream(16))

        outcome = keydist_round(x, alice, bob)

        assert outcome.alice_state == outcome.bob_state == x

    def test_full_turn(self):
        alice, bob = parties(math.pi, math.pi)

        outcome = keydist_round(KET_ZERO, alice, bob)

        assert states_close(outcome.alice_state, KET_ZERO)
        assert states_close(outcome.bob_state, KET_ZERO)

    def test_channel_needs_rng(self):
        alice, bob = parties(0.1, 0.2)

        with pytest.raises(ValueError):
            keydist_round(KET_ZERO, alice, bob, AdversarialChannel())

    @pytest.mark.parametrize("authority", [False, True])
    def test_agreement(self, authority):
        rng = make_stream(17)

        transcript = run_key_distribution(1000, SessionConfig(), None, rng,
                                          authority=authority)

        assert len(transcript.outcomes) == 1000
        assert min(transcript.agreement_fidelities) >= 1 - 1e-12
        assert len(transcript.issued_states) == (1000 if authority else 0)

    def test_authority_issue(self):
        rng = make_stream(18)

        first, copy = authority_issue(rng)
        second, _ = authority_issue(rng)

        assert first == copy
        assert first is not copy
        assert fidelity(first, second) < 1

    def test_substituted_hop_disagrees(self):
        channel = AdversarialChannel(Substitute())

        transcript = run_key_distribution(200, SessionConfig(), channel,
                                          make_stream(19))

        fidelities = numpy.array(transcript.agreement_fidelities)
        assert (fidelities < 1 - 1e-9).mean() > 0.9

    def test_outcome_fidelity(self):
        outcome = KeyDistOutcome(KET_ZERO, KET_ONE)

        assert outcome.agreement_fidelity == 0

    def test_rounds_positive(self):
        with pytest.raises(ValueError):
            run_key_distribution(0, SessionConfig(), None, make_stream(0))
