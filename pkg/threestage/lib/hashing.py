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

Derivation of agreed bit sequences

The appended known sequence of a frame is any bit string both parties
agreed on beforehand. By default it is derived from the session seed with
keyed BLAKE2b in counter mode, so that it differs between sessions while
staying reproducible.

**Provides**

 * :func:`seed_key` - Returns the BLAKE2b key bytes of a seed
 * :func:`known_sequence_from_seed` - Returns agreed bits for a session

"""

from hashlib import blake2b
from typing import Tuple

import numpy

try:
    from threestage.lib.prng import MASK64
except ImportError:
    from lib.prng import MASK64

DIGEST_SIZE = 64
PERSON = b"threestage-seq"


def seed_key(seed: int) -> bytes:
    """Returns the key bytes for a seed

    :param seed: Any integer, taken modulo 2**64
    :return: 8 byte little endian representation of the seed

    """

    return (seed & MASK64).to_bytes(8, "little")


def known_sequence_from_seed(seed: int, length: int) -> Tuple[int, ...]:
    """Returns `length` agreed bits derived from `seed`

    :param seed: Session seed
    :param length: Number of bits, may be 0
    :return: Tuple of 0/1 integers

    """

    if length < 0:
        raise ValueError(f"Sequence length {length} is negative")

    key = seed_key(seed)
    blocks = []
    counter = 0
    while DIGEST_SIZE * 8 * len(blocks) < length:
        digest = blake2b(counter.to_bytes(8, "little"),
                         digest_size=DIGEST_SIZE, key=key, person=PERSON)
        blocks.append(digest.digest())
        counter += 1

    octets = numpy.frombuffer(b"".join(blocks), dtype=numpy.uint8)
    bits = numpy.unpackbits(octets)[:length]

    return tuple(int(bit) for bit in bits)
