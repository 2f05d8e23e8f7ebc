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

Three-stage protocol and key distribution

Three-stage transfer of a state X from Alice to Bob with secret
commuting transforms U_A and U_B:

 1. Alice sends U_A(X)
 2. Bob returns U_B U_A(X)
 3. Alice removes U_A and sends U_B(X)
 4. Bob removes U_B and holds X

Key distribution: both parties apply their transform to a public (or
authority-issued) state X, exchange the results and apply their transform
again, so that both hold U_A U_B(X). Neither party measures; holding the
state value stands in for a quantum register.

Hop numbering in key distribution: hop 1 carries U_A(X) to Bob, hop 2
carries U_B(X) to Alice.

**Provides**

 * :class:`Role`
 * :class:`Status`
 * :class:`StageMessage`
 * :class:`PartyState`
 * :class:`AnglePolicy`
 * :class:`SessionConfig`
 * :class:`SessionTranscript`
 * :class:`KeyDistOutcome`
 * :class:`KeyDistTranscript`
 * :func:`check_commuting`
 * :func:`alice_stage1`
 * :func:`bob_stage2`
 * :func:`alice_stage3`
 * :func:`bob_stage4`
 * :func:`run_three_stage`
 * :func:`keydist_round`
 * :func:`authority_issue`
 * :func:`run_key_distribution`

"""

from dataclasses import dataclass, field
from enum import Enum
import logging
import math
from typing import Any, Dict, List, Optional, Sequence, Tuple

try:
    from threestage.lib.exceptions import (
        NonCommutingTransforms, StageOrderViolation, WrongRole)
    from threestage.lib.prng import RngStream
    from threestage.model.channel import AdversarialChannel, EveObservation
    from threestage.model.encoding import (
        COMPUTATIONAL, FrameSpec, FrameVerdict, OrthogonalPair, build_frame,
        decode_bit, encode_bit, verify_frame)
    from threestage.model.qubit import (
        UNITARY_TOL, Qubit, SecretTransform, Unitary2, apply, commutator_norm,
        fidelity, random_qubit)
except ImportError:
    from lib.exceptions import (
        NonCommutingTransforms, StageOrderViolation, WrongRole)
    from lib.prng import RngStream
    from model.channel import AdversarialChannel, EveObservation
    from model.encoding import (
        COMPUTATIONAL, FrameSpec, FrameVerdict, OrthogonalPair, build_frame,
        decode_bit, encode_bit, verify_frame)
    from model.qubit import (
        UNITARY_TOL, Qubit, SecretTransform, Unitary2, apply, commutator_norm,
        fidelity, random_qubit)

logger = logging.getLogger(__name__)


class Role(Enum):
    """Protocol party"""

    ALICE = "Alice"
    BOB = "Bob"


class Status(Enum):
    """Final status of a three-stage session"""

    DELIVERED = "Delivered"
    REJECTED = "Rejected"


@dataclass(frozen=True)
class StageMessage:
    """Qubit in transit between the parties"""

    session_id: str
    bit_index: int
    stage: int
    payload: Qubit

    def __post_init__(self):
        if self.stage not in (1, 2, 3):
            raise ValueError(f"Stage {self.stage} not in 1, 2, 3")
        if self.bit_index < 0:
            raise ValueError(f"Bit index {self.bit_index} is negative")


class PartyState:
    """Secret transform, encoding and per-bit stage cursor of a party

    The cursor maps a bit index to the last step the party completed for
    it. Alice completes steps 1 and 3, Bob steps 2 and 4.

    """

    def __init__(self, role: Role, transform: SecretTransform,
                 pair: OrthogonalPair = COMPUTATIONAL):
        """
        :param role: Alice or Bob
        :param transform: Secret transform
        :param pair: Agreed bit encoding

        """

        self.role = role
        self.transform = transform
        self.pair = pair
        self.cursor: Dict[int, int] = {}

    def rekey(self, transform: SecretTransform):
        """Replaces the secret transform, e.g. before each bit"""

        self.transform = transform

    def check_role(self, role: Role):
        """Raises WrongRole unless the party has role"""

        if self.role is not role:
            raise WrongRole(f"{self.role.value} cannot act as {role.value}")

    def advance(self, bit_index: int, required: int, reached: int):
        """Moves the cursor of bit_index from required to reached

        :param bit_index: Index of the transmitted bit
        :param required: Step the party must have completed so far
        :param reached: Step completed now

        """

        current = self.cursor.get(bit_index, 0)
        if current != required:
            msg = "{} is at step {} of bit {}, step {} needs step {}"
            raise StageOrderViolation(msg.format(self.role.value, current,
                                                 bit_index, reached, required))
        self.cursor[bit_index] = reached

    def __repr__(self) -> str:
        return f"PartyState({self.role.value}, {self.transform!r})"


def check_commuting(alice: PartyState, bob: PartyState):
    """Raises NonCommutingTransforms unless U_A U_B = U_B U_A"""

    norm = commutator_norm(alice.transform.unitary, bob.transform.unitary)
    if norm > UNITARY_TOL:
        msg = f"Commutator norm of U_A and U_B is {norm!r}"
        raise NonCommutingTransforms(msg)


def _check_stage(msg: StageMessage, stage: int):
    if msg.stage != stage:
        text = f"Expected a stage {stage} message, got stage {msg.stage}"
        raise StageOrderViolation(text)


def alice_stage1(x: Qubit, a: PartyState, bit_index: int = 0,
                 session_id: str = "") -> StageMessage:
    """Alice applies U_A to X and sends it"""

    a.check_role(Role.ALICE)
    a.advance(bit_index, 0, 1)

    payload = apply(a.transform.unitary, x)
    return StageMessage(session_id, bit_index, 1, payload)


def bob_stage2(msg: StageMessage, b: PartyState) -> StageMessage:
    """Bob applies U_B to U_A(X) and returns it"""

    b.check_role(Role.BOB)
    _check_stage(msg, 1)
    b.advance(msg.bit_index, 0, 2)

    payload = apply(b.transform.unitary, msg.payload)
    return StageMessage(msg.session_id, msg.bit_index, 2, payload)


def alice_stage3(msg: StageMessage, a: PartyState) -> StageMessage:
    """Alice applies U_A† to U_B U_A(X), leaving U_B(X), and sends it"""

    a.check_role(Role.ALICE)
    _check_stage(msg, 2)
    a.advance(msg.bit_index, 1, 3)

    payload = apply(a.transform.adjoint, msg.payload)
    return StageMessage(msg.session_id, msg.bit_index, 3, payload)


def bob_stage4(msg: StageMessage, b: PartyState) -> Qubit:
    """Bob applies U_B† to U_B(X) and holds X"""

    b.check_role(Role.BOB)
    _check_stage(msg, 3)
    b.advance(msg.bit_index, 2, 4)

    return apply(b.transform.adjoint, msg.payload)


@dataclass(frozen=True)
class AnglePolicy:
    """How rotation angles are chosen for each transmitted bit

    ``random`` draws fresh θ, φ uniform in [0, 2π) for every bit.
    ``fixed`` uses the same θ for Alice and φ for Bob throughout, which
    lets Eve gather statistics across bits.

    """

    mode: str = "random"
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if self.mode not in ("random", "fixed"):
            raise ValueError(f"Angle mode {self.mode!r} unknown")
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("Fixed angles must be finite")

    @classmethod
    def random(cls) -> "AnglePolicy":
        return cls("random")

    @classmethod
    def fixed(cls, theta: float, phi: float) -> "AnglePolicy":
        return cls("fixed", float(theta), float(phi))

    def transforms(self, rng: RngStream) -> Tuple[SecretTransform,
                                                  SecretTransform]:
        """Returns Alice's and Bob's transforms for the next bit"""

        if self.mode == "fixed":
            return (SecretTransform.from_angle(self.theta),
                    SecretTransform.from_angle(self.phi))

        return (SecretTransform.random_rotation(rng),
                SecretTransform.random_rotation(rng))


@dataclass(frozen=True)
class SessionConfig:
    """Parameters of a session

    Explicit unitaries override the angle policy and are used for every
    bit; they allow commuting pairs other than rotations.

    """

    frame: Optional[FrameSpec] = None
    pair: OrthogonalPair = COMPUTATIONAL
    angles: AnglePolicy = AnglePolicy()
    alice_unitary: Optional[Unitary2] = None
    bob_unitary: Optional[Unitary2] = None
    session_id: str = "session-0"

    def transforms(self, rng: RngStream) -> Tuple[SecretTransform,
                                                  SecretTransform]:
        """Returns Alice's and Bob's transforms for the next bit"""

        alice = bob = None
        if self.alice_unitary is None or self.bob_unitary is None:
            alice, bob = self.angles.transforms(rng)
        if self.alice_unitary is not None:
            alice = SecretTransform(self.alice_unitary)
        if self.bob_unitary is not None:
            bob = SecretTransform(self.bob_unitary)

        return alice, bob

    def echo(self) -> Dict[str, Any]:
        """Returns the configuration as plain values for transcripts"""

        echo = {
            "session_id": self.session_id,
            "pair": self.pair.name,
            "angle_mode": self.angles.mode,
        }
        if self.angles.mode == "fixed":
            echo["theta"] = self.angles.theta
            echo["phi"] = self.angles.phi
        if self.frame is not None:
            echo["data_length"] = self.frame.data_length
            echo["parity_block_size"] = self.frame.parity_block_size
            echo["known_sequence"] = list(self.frame.known_sequence)
        return echo


@dataclass
class SessionTranscript:
    """Record of a three-stage session"""

    config: Dict[str, Any]
    frame: List[int]
    messages: List[StageMessage] = field(default_factory=list)
    observations: List[EveObservation] = field(default_factory=list)
    decoded: List[int] = field(default_factory=list)
    recovery_fidelities: List[float] = field(default_factory=list)
    verdict: FrameVerdict = field(default_factory=FrameVerdict)
    status: Status = Status.DELIVERED

    @property
    def data_length(self) -> int:
        return self.config.get("data_length", len(self.frame))

    @property
    def data(self) -> List[int]:
        """Data bits that Alice sent"""

        return self.frame[:self.data_length]

    @property
    def decoded_data(self) -> List[int]:
        """Data bits that Bob read"""

        return self.decoded[:self.data_length]

    @property
    def bit_errors(self) -> int:
        """Number of data bits that Bob read wrong"""

        return sum(sent != read
                   for sent, read in zip(self.data, self.decoded_data))

    @property
    def is_complete(self) -> bool:
        """True if every framed bit has its three stage messages"""

        per_bit = {}
        for msg in self.messages:
            per_bit.setdefault(msg.bit_index, []).append(msg.stage)
        return len(per_bit) == len(self.frame) and \
            all(stages == [1, 2, 3] for stages in per_bit.values())


def run_three_stage(data: Sequence[int], cfg: SessionConfig,
                    channel: Optional[AdversarialChannel],
                    rng: RngStream) -> SessionTranscript:
    """Sends data framed bit by bit through the three-stage protocol

    Every hop passes the channel. Bob reads each bit by measuring in the
    agreed pair basis, then verifies the frame.

    :param data: Data bits, cfg.frame.data_length of them
    :param cfg: Session configuration with frame
    :param channel: Channel, None for an undisturbed medium
    :param rng: Random stream of the session
    :return: Complete transcript

    """

    if cfg.frame is None:
        raise ValueError("A three-stage session needs a frame layout")
    if channel is None:
        channel = AdversarialChannel()

    frame = build_frame(data, cfg.frame)

    alice_transform, bob_transform = cfg.transforms(rng)
    alice = PartyState(Role.ALICE, alice_transform, cfg.pair)
    bob = PartyState(Role.BOB, bob_transform, cfg.pair)
    check_commuting(alice, bob)

    logger.debug("Session %s: %d framed bits", cfg.session_id, len(frame))

    transcript = SessionTranscript(cfg.echo(), frame)
    messages = transcript.messages

    for index, bit in enumerate(frame):
        if index:
            alice_transform, bob_transform = cfg.transforms(rng)
            alice.rekey(alice_transform)
            bob.rekey(bob_transform)
            check_commuting(alice, bob)

        x = encode_bit(bit, cfg.pair)

        msg = alice_stage1(x, alice, index, cfg.session_id)
        messages.append(msg)
        msg = bob_stage2(channel.transmit(msg, rng), bob)
        messages.append(msg)
        msg = alice_stage3(channel.transmit(msg, rng), alice)
        messages.append(msg)
        received = bob_stage4(channel.transmit(msg, rng), bob)

        transcript.recovery_fidelities.append(fidelity(received, x))
        transcript.decoded.append(decode_bit(received, cfg.pair, rng))

    transcript.observations = list(channel.observations)
    transcript.verdict = verify_frame(transcript.decoded, cfg.frame)
    if transcript.verdict.accepted:
        transcript.status = Status.DELIVERED
    else:
        transcript.status = Status.REJECTED

    logger.debug("Session %s: %s", cfg.session_id, transcript.status.value)

    return transcript


@dataclass(frozen=True)
class KeyDistOutcome:
    """States held by Alice and Bob after a key distribution round"""

    alice_state: Qubit
    bob_state: Qubit
    agreement_fidelity: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "agreement_fidelity",
                           fidelity(self.alice_state, self.bob_state))


def keydist_round(x_public: Qubit, a: PartyState, b: PartyState,
                  channel: Optional[AdversarialChannel] = None,
                  rng: Optional[RngStream] = None, bit_index: int = 0,
                  session_id: str = "", x_bob: Optional[Qubit] = None
                  ) -> KeyDistOutcome:
    """Two-stage key distribution round

    :param x_public: Alice's copy of the known state X
    :param a: Alice
    :param b: Bob
    :param channel: Channel for the two exchanged qubits, None if clean
    :param rng: Random stream, required when a channel is given
    :param bit_index: Round number, used as message index
    :param session_id: Session identifier for messages
    :param x_bob: Bob's copy of X if it was issued separately
    :return: Both parties' final states

    """

    a.check_role(Role.ALICE)
    b.check_role(Role.BOB)
    check_commuting(a, b)

    if x_bob is None:
        x_bob = x_public

    to_bob = StageMessage(session_id, bit_index, 1,
                          apply(a.transform.unitary, x_public))
    to_alice = StageMessage(session_id, bit_index, 2,
                            apply(b.transform.unitary, x_bob))

    if channel is not None:
        if rng is None:
            raise ValueError("A channel needs a random stream")
        to_bob = channel.transmit(to_bob, rng)
        to_alice = channel.transmit(to_alice, rng)

    alice_state = apply(a.transform.unitary, to_alice.payload)
    bob_state = apply(b.transform.unitary, to_bob.payload)

    return KeyDistOutcome(alice_state, bob_state)


def authority_issue(rng: RngStream) -> Tuple[Qubit, Qubit]:
    """Returns two copies of a Haar-random state prepared by an authority

    The authority prepares the state twice, nothing is cloned.

    """

    state = random_qubit(rng)
    return state, Qubit(state.amp0, state.amp1)


@dataclass
class KeyDistTranscript:
    """Record of repeated key distribution rounds"""

    config: Dict[str, Any]
    public_state: Optional[Qubit] = None
    issued_states: List[Qubit] = field(default_factory=list)
    outcomes: List[KeyDistOutcome] = field(default_factory=list)
    observations: List[EveObservation] = field(default_factory=list)
    events: List[str] = field(default_factory=list)

    @property
    def agreement_fidelities(self) -> List[float]:
        return [outcome.agreement_fidelity for outcome in self.outcomes]


def run_key_distribution(rounds: int, cfg: SessionConfig,
                         channel: Optional[AdversarialChannel],
                         rng: RngStream, authority: bool = False,
                         x_public: Optional[Qubit] = None
                         ) -> KeyDistTranscript:
    """Runs independent key distribution rounds

    :param rounds: Number of rounds
    :param cfg: Session configuration, the frame is ignored
    :param channel: Channel for the exchanged qubits, None if clean
    :param rng: Random stream of the session
    :param authority: Draw X from the registration authority every round
    :param x_public: Public state, defaults to state0 of the config pair

    """

    if rounds < 1:
        raise ValueError(f"Number of rounds {rounds} is not positive")
    if channel is None:
        channel = AdversarialChannel()
    if x_public is None and not authority:
        x_public = cfg.pair.state0

    echo = cfg.echo()
    echo["authority"] = authority
    echo["rounds"] = rounds
    transcript = KeyDistTranscript(echo, None if authority else x_public)

    for index in range(rounds):
        alice_transform, bob_transform = cfg.transforms(rng)
        alice = PartyState(Role.ALICE, alice_transform, cfg.pair)
        bob = PartyState(Role.BOB, bob_transform, cfg.pair)

        if authority:
            x_alice, x_bob = authority_issue(rng)
            transcript.issued_states.append(x_alice)
            transcript.events.append(f"authority issued X for round {index}")
        else:
            x_alice = x_bob = x_public

        outcome = keydist_round(x_alice, alice, bob, channel, rng, index,
                                cfg.session_id, x_bob)
        transcript.outcomes.append(outcome)

    transcript.observations = list(channel.observations)

    logger.debug("Key distribution %s: %d rounds, min agreement %r",
                 cfg.session_id, rounds,
                 min(transcript.agreement_fidelities))

    return transcript
