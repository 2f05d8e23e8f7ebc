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

Bit encoding and integrity framing

Classical bits travel as one of two orthogonal states agreed on in
advance. Tampering with the transmitted states is detected by a frame
that is laid out as

    data bits | one even-parity bit per data block | known sequence

Parity detects and localizes errors, it never corrects them.

**Provides**

 * :class:`OrthogonalPair`
 * :class:`FrameSpec`
 * :class:`FrameVerdict`
 * :func:`general_pair`
 * :func:`random_pair`
 * :func:`standard_pairs`
 * :func:`encode_bit`
 * :func:`decode_bit`
 * :func:`parity_bits`
 * :func:`build_frame`
 * :func:`verify_frame`

"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy

try:
    from threestage.lib.catalogue import Catalogue
    from threestage.lib.exceptions import DegenerateBasis, LengthMismatch
    from threestage.lib.prng import RngStream
    from threestage.lib.typechecks import check_bits, is_bit
    from threestage.model.qubit import (
        KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO, NORM_TOL, Qubit, inner,
        make_qubit, measure, orthogonal_complement, random_qubit)
except ImportError:
    from lib.catalogue import Catalogue
    from lib.exceptions import DegenerateBasis, LengthMismatch
    from lib.prng import RngStream
    from lib.typechecks import check_bits, is_bit
    from model.qubit import (
        KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO, NORM_TOL, Qubit, inner,
        make_qubit, measure, orthogonal_complement, random_qubit)

DEFAULT_PARITY_BLOCK_SIZE = 8


@dataclass(frozen=True)
class OrthogonalPair:
    """Two orthogonal states that encode the bits 0 and 1"""

    state0: Qubit
    state1: Qubit
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        overlap = abs(inner(self.state0, self.state1))
        if overlap > NORM_TOL:
            raise DegenerateBasis(f"|⟨state0|state1⟩| is {overlap!r}")

    def __getitem__(self, bit: int) -> Qubit:
        return (self.state0, self.state1)[bit]


COMPUTATIONAL = OrthogonalPair(KET_ZERO, KET_ONE, "computational")
HADAMARD = OrthogonalPair(KET_PLUS, KET_MINUS, "hadamard")


def general_pair(alpha: complex, beta: complex) -> OrthogonalPair:
    """Returns the pair α|0⟩ + β|1⟩, β*|0⟩ − α*|1⟩

    For real α, β this is α|0⟩ + β|1⟩, β|0⟩ − α|1⟩.

    :param alpha: Amplitude of |0⟩ in state0
    :param beta: Amplitude of |1⟩ in state0
    :return: Pair, raises NotNormalized unless |α|² + |β|² = 1

    """

    alpha, beta = complex(alpha), complex(beta)
    state0 = make_qubit(alpha, beta)
    state1 = make_qubit(beta.conjugate(), -alpha.conjugate())
    return OrthogonalPair(state0, state1, "general")


def random_pair(rng: RngStream) -> OrthogonalPair:
    """Returns a Haar-random orthonormal basis"""

    state0 = random_qubit(rng)
    return OrthogonalPair(state0, orthogonal_complement(state0), "random")


def standard_pairs() -> Catalogue:
    """Returns the catalogue of standard encodings

    ``computational`` and ``hadamard`` are pairs, ``general`` is the
    :func:`general_pair` constructor.

    """

    return Catalogue(computational=COMPUTATIONAL, hadamard=HADAMARD,
                     general=general_pair)


def encode_bit(bit: int, pair: OrthogonalPair) -> Qubit:
    """Returns the state of pair that represents bit"""

    if not is_bit(bit):
        raise ValueError(f"{bit!r} is not a bit")

    return pair[bit]


def decode_bit(q: Qubit, pair: OrthogonalPair, rng: RngStream) -> int:
    """Reads a bit by measuring q in the pair basis"""

    bit, _ = measure(q, pair, rng)
    return bit


@dataclass(frozen=True)
class FrameSpec:
    """Layout of a frame: data, block parities, known sequence"""

    data_length: int
    parity_block_size: int = DEFAULT_PARITY_BLOCK_SIZE
    known_sequence: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "known_sequence",
                           check_bits(self.known_sequence))

        if self.parity_block_size < 1:
            msg = f"Parity block size {self.parity_block_size} is not positive"
            raise ValueError(msg)
        if self.data_length < 1:
            msg = f"Data length {self.data_length} is not positive"
            raise LengthMismatch(msg)
        if self.data_length % self.parity_block_size:
            msg = "Block size {} does not divide data length {}"
            raise LengthMismatch(msg.format(self.parity_block_size,
                                            self.data_length))

    @property
    def parity_length(self) -> int:
        """Number of parity bits"""

        return self.data_length // self.parity_block_size

    @property
    def frame_length(self) -> int:
        """Total number of bits in a frame"""

        return self.data_length + self.parity_length + \
            len(self.known_sequence)

    @property
    def data_slice(self) -> slice:
        return slice(0, self.data_length)

    @property
    def parity_slice(self) -> slice:
        return slice(self.data_length, self.data_length + self.parity_length)

    @property
    def sequence_slice(self) -> slice:
        return slice(self.data_length + self.parity_length, self.frame_length)


@dataclass(frozen=True)
class FrameVerdict:
    """Outcome of frame verification

    Sequence mismatch positions are indices into the known sequence.

    """

    parity_failures: Tuple[int, ...] = ()
    sequence_mismatch_positions: Tuple[int, ...] = ()

    @property
    def accepted(self) -> bool:
        """True iff no parity block failed and the sequence matched"""

        return not (self.parity_failures or self.sequence_mismatch_positions)


def parity_bits(data: Sequence[int], block_size: int) -> List[int]:
    """Returns the even parity bit of each block of data

    :param data: Bits, length must be a multiple of block_size
    :param block_size: Bits per parity block

    """

    blocks = numpy.asarray(data, dtype=numpy.int64).reshape(-1, block_size)
    return [int(bit) for bit in blocks.sum(axis=1) % 2]


def build_frame(data: Sequence[int], layout: FrameSpec) -> List[int]:
    """Returns data followed by its block parities and the known sequence

    :param data: Data bits, exactly layout.data_length of them
    :param layout: Frame layout

    """

    data = check_bits(data)
    if len(data) != layout.data_length:
        msg = f"Got {len(data)} data bits, frame expects {layout.data_length}"
        raise LengthMismatch(msg)

    parities = parity_bits(data, layout.parity_block_size)
    return list(data) + parities + list(layout.known_sequence)


def verify_frame(received: Sequence[int], layout: FrameSpec) -> FrameVerdict:
    """Checks parities and known sequence of a received frame

    :param received: Received frame bits
    :param layout: Frame layout
    :return: Verdict listing failed parity blocks and sequence mismatches

    """

    received = check_bits(received)
    if len(received) != layout.frame_length:
        msg = f"Got {len(received)} bits, frame has {layout.frame_length}"
        raise LengthMismatch(msg)

    expected = parity_bits(received[layout.data_slice],
                           layout.parity_block_size)
    parities = received[layout.parity_slice]
    parity_failures = tuple(i for i, (exp, got)
                            in enumerate(zip(expected, parities))
                            if exp != got)

    sequence = received[layout.sequence_slice]
    mismatches = tuple(i for i, (exp, got)
                       in enumerate(zip(layout.known_sequence, sequence))
                       if exp != got)

    return FrameVerdict(parity_failures, mismatches)
