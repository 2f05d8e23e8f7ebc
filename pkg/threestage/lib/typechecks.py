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

Functions for checking bits and numbers

**Provides**

 * :func:`is_bit`
 * :func:`check_bits`
 * :func:`check_finite`

"""

import math
from typing import Iterable, Tuple

import numpy

try:
    from threestage.lib.exceptions import NonFiniteInput
except ImportError:
    from lib.exceptions import NonFiniteInput


def is_bit(obj: object) -> bool:
    """Is `obj` a classical bit

    :param obj: Object to be checked
    :return: True if obj is the integer 0 or 1 (bool and numpy ints included)

    """

    return isinstance(obj, (int, numpy.integer)) and obj in (0, 1)


def check_bits(bits: Iterable) -> Tuple[int, ...]:
    """Checks that all elements of bits are bits

    :param bits: Bit sequence to be checked
    :return: Bits as tuple of int, raises a ValueError otherwise

    """

    bits = tuple(bits)

    for i, bit in enumerate(bits):
        if not is_bit(bit):
            raise ValueError("Element {} of bit list is {!r}".format(i, bit))

    return tuple(int(bit) for bit in bits)


def check_finite(*values: complex) -> bool:
    """Checks that no value is NaN or infinite

    :param values: Real or complex numbers to be checked
    :return: True if yes, raises NonFiniteInput otherwise

    """

    for value in values:
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NonFiniteInput(f"{value} is not finite")

    return True
