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

Exception hierarchy of threestage

All errors derive from :class:`ThreeStageError`. Errors that reject an
invalid value also derive from :class:`ValueError` so that callers that
only know about builtin exceptions still catch them.

**Provides**

 * :class:`ThreeStageError`
 * :class:`NotNormalized`
 * :class:`NonFiniteInput`
 * :class:`NotUnitary`
 * :class:`DegenerateBasis`
 * :class:`LengthMismatch`
 * :class:`MisalignedIndices`
 * :class:`EmptyCounts`
 * :class:`ParseError`
 * :class:`ConfigurationError`
 * :class:`ProtocolError`
 * :class:`StageOrderViolation`
 * :class:`NonCommutingTransforms`
 * :class:`WrongRole`

"""


class ThreeStageError(Exception):
    """Base class of all threestage errors"""


class NotNormalized(ThreeStageError, ValueError):
    """State amplitudes do not have unit norm within tolerance"""


class NonFiniteInput(ThreeStageError, ValueError):
    """NaN or infinity in an angle, amplitude or matrix entry"""


class NotUnitary(ThreeStageError, ValueError):
    """Matrix violates U†U = I within tolerance"""


class DegenerateBasis(ThreeStageError, ValueError):
    """Basis states are not mutually orthogonal"""


class LengthMismatch(ThreeStageError, ValueError):
    """Bit list length does not match the frame layout"""


class MisalignedIndices(ThreeStageError, ValueError):
    """Observation bit indices do not line up with the truth bits"""


class EmptyCounts(ThreeStageError, ValueError):
    """Contingency table without any count"""


class ParseError(ThreeStageError, ValueError):
    """Malformed report or transcript text"""


class ConfigurationError(ThreeStageError, ValueError):
    """Invalid experiment configuration"""


class ProtocolError(ThreeStageError):
    """Violation of the message flow between Alice and Bob"""


class StageOrderViolation(ProtocolError):
    """Stage message received out of order, twice or for the wrong stage"""


class NonCommutingTransforms(ProtocolError):
    """Secret transforms of Alice and Bob do not commute"""


class WrongRole(ProtocolError):
    """Stage operation invoked with the other party's state"""
