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

**Provides**

 * :class:`Settings`

"""

from pathlib import Path
from typing import Any, Optional, Tuple


class Settings:
    """Contains all default settings of an experiment run."""

    protocols = ("three-stage", "keydist", "keydist-authority")
    """Protocol choices"""

    angle_modes = ("random", "fixed")
    """Angle policy choices"""

    pairs = ("computational", "hadamard", "general")
    """Encoding pair choices"""

    adversaries = ("none", "intercept-resend", "substitute")
    """Adversary strategy choices"""

    eve_bases = ("computational", "hadamard", "random")
    """Choices for Eve's measurement basis"""

    report_formats = ("json", "csv")
    """Report serialization formats"""

    protocol = "three-stage"
    """Protocol that is simulated"""

    bits = 64
    """Data bits per three-stage session or rounds per key distribution"""

    trials = 1
    """Number of independent sessions"""

    seed = 0
    """Run seed, determines every random draw of a run"""

    angle_mode = "random"
    """Fresh angles per bit (`random`) or one pair of angles (`fixed`)"""

    theta: Optional[float] = None
    """Alice's rotation angle in fixed mode"""

    phi: Optional[float] = None
    """Bob's rotation angle in fixed mode"""

    pair = "computational"
    """Agreed bit encoding"""

    alpha: Optional[float] = None
    """Amplitude of |0⟩ in state0 of the general pair"""

    beta: Optional[float] = None
    """Amplitude of |1⟩ in state0 of the general pair"""

    adversary = "none"
    """Eve's strategy"""

    eve_basis = "computational"
    """Eve's measurement basis for intercept-resend"""

    eve_stages: Tuple[int, ...] = (1,)
    """Hops that Eve attacks"""

    known_bits = 32
    """Length of the appended known sequence"""

    parity_block = 8
    """Data bits per parity bit"""

    out: Optional[Path] = None
    """Report file, stdout if None"""

    report_format = "json"
    """Report format"""

    dump_transcripts = False
    """If `True` then per-session transcripts are written as JSON lines"""

    workers = 1
    """Number of worker processes for trials"""

    log_level = "WARNING"
    """Root logger level"""

    def __setattr__(self, key: str, value: Any):
        """
        Overloads __setattr__ to ensure that only existing attributes are set

        :param key: Setting attribute key
        :param value: New setting value

        """

        if not hasattr(self, key):
            raise AttributeError(f"{self} has no attribute {key}.")
        super().__setattr__(key, value)

    def reset(self):
        """Reset to defaults"""

        cls_attrs = (attr for attr in dir(self)
                     if not attr.startswith("__")
                     and not callable(getattr(Settings, attr)))
        for cls_attr in cls_attrs:
            setattr(self, cls_attr, getattr(Settings, cls_attr))
