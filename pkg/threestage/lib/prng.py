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

Reproducible random streams

Every random draw of a run comes from a :class:`numpy.random.Generator`
that is passed around explicitly. Trial ``i`` of a run with seed ``s``
draws from the child of ``SeedSequence(s)`` with spawn key ``(i,)``, so it
sees the same stream no matter which worker executes it or in which order.

**Provides**

 * :data:`RngStream`
 * :func:`seed_sequence`
 * :func:`mix_seed`
 * :func:`make_stream`
 * :func:`trial_stream`

"""

import numpy

MASK64 = 0xFFFFFFFFFFFFFFFF

RngStream = numpy.random.Generator


def seed_sequence(seed: int, index: int) -> numpy.random.SeedSequence:
    """Returns the seed sequence of sub-stream `index` of `seed`

    Equal to ``numpy.random.SeedSequence(seed).spawn(index + 1)[index]``.

    :param seed: Run seed, any integer (taken modulo 2**64)
    :param index: Non-negative sub-stream index, e.g. the trial number

    """

    if index < 0:
        raise ValueError(f"Stream index {index} is negative")

    return numpy.random.SeedSequence(seed & MASK64, spawn_key=(index,))


def mix_seed(seed: int, index: int) -> int:
    """Derives a 64-bit integer seed for sub-stream `index` of `seed`

    Used where a plain integer is needed, e.g. as hashing key.

    """

    state = seed_sequence(seed, index).generate_state(1, numpy.uint64)
    return int(state[0])


def make_stream(seed: int) -> RngStream:
    """Returns a generator that is fully determined by `seed`

    :param seed: Any integer, taken modulo 2**64

    """

    return numpy.random.Generator(numpy.random.PCG64(seed & MASK64))


def trial_stream(seed: int, index: int) -> RngStream:
    """Returns the independent stream of trial `index` of a run

    :param seed: Run seed
    :param index: Trial index

    """

    return numpy.random.Generator(
        numpy.random.PCG64(seed_sequence(seed, index)))
