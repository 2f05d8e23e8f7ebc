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

Transmission medium with eavesdropper strategies

Every hop of a session passes :func:`transmit`. Eve may leave the qubit
alone, measure it in a basis of her choice and forward the collapsed
state, or replace it with a state of her own. Measurements are recorded
as :class:`EveObservation` for later information analysis; substitutions
are not, since they do not give her an outcome.

**Provides**

 * :class:`Passthrough`
 * :class:`InterceptResend`
 * :class:`Substitute`
 * :data:`AdversaryStrategy`
 * :class:`EveObservation`
 * :class:`AdversarialChannel`
 * :func:`transmit`
 * :func:`eve_statistics`

"""

from dataclasses import dataclass, replace
import logging
from typing import (TYPE_CHECKING, FrozenSet, Iterable, List, Optional,
                    Sequence, Tuple, Union)

import numpy

try:
    from threestage.lib.exceptions import (
        MisalignedIndices, StageOrderViolation)
    from threestage.lib.information import JointCounts
    from threestage.lib.prng import RngStream
    from threestage.model.encoding import (
        COMPUTATIONAL, OrthogonalPair, random_pair)
    from threestage.model.qubit import measure, random_qubit
except ImportError:
    from lib.exceptions import MisalignedIndices, StageOrderViolation
    from lib.information import JointCounts
    from lib.prng import RngStream
    from model.encoding import COMPUTATIONAL, OrthogonalPair, random_pair
    from model.qubit import measure, random_qubit

if TYPE_CHECKING:
    from threestage.model.protocol import StageMessage

logger = logging.getLogger(__name__)

STAGES = frozenset({1, 2, 3})


def _check_stages(stages: Iterable[int]) -> FrozenSet[int]:
    """Returns stages as frozenset, raises ValueError if invalid"""

    stages = frozenset(stages)
    if not stages:
        raise ValueError("An active adversary needs at least one stage")
    if not stages <= STAGES:
        raise ValueError(f"Stages {sorted(stages - STAGES)} not in 1, 2, 3")
    return stages


@dataclass(frozen=True)
class Passthrough:
    """No eavesdropper"""

    name = "none"

    @property
    def stages(self) -> FrozenSet[int]:
        return frozenset()


@dataclass(frozen=True)
class InterceptResend:
    """Eve measures targeted hops and forwards the collapsed state

    ``basis=None`` draws a Haar-random basis for every intercepted qubit.

    """

    basis: Optional[OrthogonalPair] = COMPUTATIONAL
    stages: FrozenSet[int] = frozenset({1})

    name = "intercept-resend"

    def __post_init__(self):
        object.__setattr__(self, "stages", _check_stages(self.stages))


@dataclass(frozen=True)
class Substitute:
    """Eve replaces the qubit on targeted hops by a Haar-random state"""

    stages: FrozenSet[int] = frozenset({1})

    name = "substitute"

    def __post_init__(self):
        object.__setattr__(self, "stages", _check_stages(self.stages))


AdversaryStrategy = Union[Passthrough, InterceptResend, Substitute]


@dataclass(frozen=True)
class EveObservation:
    """Outcome of one of Eve's measurements"""

    bit_index: int
    stage: int
    outcome: int
    basis: OrthogonalPair


def transmit(msg: "StageMessage", strategy: AdversaryStrategy,
             rng: RngStream) -> Tuple["StageMessage",
                                      Optional[EveObservation]]:
    """Passes a message through the channel

    :param msg: Message as sent
    :param strategy: Eve's strategy
    :param rng: Random stream, untouched for hops Eve leaves alone
    :return: Message as received and Eve's observation if she measured

    """

    if msg.stage not in strategy.stages:
        return msg, None

    if isinstance(strategy, InterceptResend):
        basis = strategy.basis
        if basis is None:
            basis = random_pair(rng)
        outcome, collapsed = measure(msg.payload, basis, rng)
        observation = EveObservation(msg.bit_index, msg.stage, outcome, basis)
        return replace(msg, payload=collapsed), observation

    if isinstance(strategy, Substitute):
        return replace(msg, payload=random_qubit(rng)), None

    raise TypeError(f"Unknown adversary strategy {strategy!r}")


class AdversarialChannel:
    """Channel of one session, owns Eve's observation log"""

    def __init__(self, strategy: AdversaryStrategy = Passthrough()):
        """
        :param strategy: Eve's strategy for this session

        """

        self.strategy = strategy
        self.observations: List[EveObservation] = []
        self._observed = set()

    def transmit(self, msg: "StageMessage",
                 rng: RngStream) -> "StageMessage":
        """Passes msg through the channel and logs Eve's observation"""

        received, observation = transmit(msg, self.strategy, rng)

        if observation is not None:
            key = observation.bit_index, observation.stage
            if key in self._observed:
                text = "Second observation of bit {} at stage {}"
                raise StageOrderViolation(text.format(*key))
            self._observed.add(key)
            self.observations.append(observation)

        return received

    def reset(self):
        """Clears the observation log"""

        self.observations = []
        self._observed = set()


def eve_statistics(observations: Sequence[EveObservation],
                   truths: Sequence[int], stage: int = 1) -> JointCounts:
    """Returns the 2×2 table of (true bit, Eve's outcome) for one stage

    :param observations: Eve's observations of a session
    :param truths: Bits sent, indexed like the observations' bit_index
    :param stage: Stage whose observations are counted

    """

    counts = numpy.zeros((2, 2), dtype=numpy.int64)
    seen = set()

    for observation in observations:
        if observation.stage != stage:
            continue
        index = observation.bit_index
        if not 0 <= index < len(truths):
            msg = f"Observation of bit {index} beyond {len(truths)} truths"
            raise MisalignedIndices(msg)
        if index in seen:
            raise MisalignedIndices(f"Bit {index} observed twice")
        seen.add(index)
        counts[truths[index], observation.outcome] += 1

    return counts
