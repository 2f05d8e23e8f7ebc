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

* :func:`check_mandatory_dependencies`:
* :func:`stage_list`:
* :class:`ThreeStageArgumentParser`:
* :func:`config_from_args`:

"""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
import logging
from pathlib import Path
import sys
from typing import Tuple

try:
    from threestage.__init__ import APP_NAME, VERSION
    from threestage.experiment import ExperimentConfig
    from threestage.installer import REQUIRED_DEPENDENCIES
    from threestage.settings import Settings
except ImportError:
    from __init__ import APP_NAME, VERSION
    from experiment import ExperimentConfig
    from installer import REQUIRED_DEPENDENCIES
    from settings import Settings

logger = logging.getLogger(__name__)


def check_mandatory_dependencies():
    """Checks mandatory dependencies and logs a warning if they are not met"""

    major, minor, micro = sys.version_info[:3]
    if (major, minor) < (3, 8):
        logger.warning("Python has version %d.%d.%d but ≥ 3.8 is required.",
                       major, minor, micro)

    for module in REQUIRED_DEPENDENCIES:
        if not module.is_installed():
            logger.warning("Required module %s not found.", module.name)
        elif module.version < module.required_version:
            logger.warning("Module %s has version %s but %s is required.",
                           module.name, module.version,
                           module.required_version)


def stage_list(text: str) -> Tuple[int, ...]:
    """Parses a comma separated stage list such as ``1,3``

    :param text: Command line value
    :return: Sorted tuple of distinct stages

    """

    try:
        stages = {int(item) for item in text.split(",") if item.strip()}
    except ValueError:
        raise ArgumentTypeError(f"{text!r} is no comma separated stage list")

    if not stages:
        raise ArgumentTypeError("Stage list is empty")
    if not stages <= {1, 2, 3}:
        raise ArgumentTypeError(f"Stages {text!r} not within 1, 2, 3")

    return tuple(sorted(stages))


class ThreeStageArgumentParser(ArgumentParser):
    """Parser for the command line"""

    def __init__(self):
        check_mandatory_dependencies()

        description = "Seeded simulator of the three-stage quantum " \
                      "cryptography protocol and its key distribution " \
                      "protocol with eavesdropper models."

        super().__init__(prog=APP_NAME, description=description)

        self.add_argument('--version', action='version', version=VERSION)

        self.add_argument('--protocol', choices=Settings.protocols,
                          default=Settings.protocol,
                          help='protocol to simulate')
        self.add_argument('--bits', type=int, default=Settings.bits,
                          help='data bits per session or key distribution '
                               'rounds per trial')
        self.add_argument('--trials', type=int, default=Settings.trials,
                          help='number of independent sessions')
        self.add_argument('--seed', type=int, default=Settings.seed,
                          help='run seed, determines every random draw')

        self.add_argument('--angle-mode', choices=Settings.angle_modes,
                          default=Settings.angle_mode,
                          help='fresh angles per bit or fixed angles')
        self.add_argument('--theta', type=float, default=Settings.theta,
                          help="Alice's angle in radians (fixed mode)")
        self.add_argument('--phi', type=float, default=Settings.phi,
                          help="Bob's angle in radians (fixed mode)")

        self.add_argument('--pair', choices=Settings.pairs,
                          default=Settings.pair,
                          help='orthogonal pair that encodes the bits')
        self.add_argument('--alpha', type=float, default=Settings.alpha,
                          help='alpha of the general pair')
        self.add_argument('--beta', type=float, default=Settings.beta,
                          help='beta of the general pair')

        self.add_argument('--adversary', choices=Settings.adversaries,
                          default=Settings.adversary,
                          help="Eve's strategy")
        self.add_argument('--eve-basis', choices=Settings.eve_bases,
                          default=Settings.eve_basis,
                          help="Eve's measurement basis")
        self.add_argument('--eve-stages', type=stage_list,
                          default=Settings.eve_stages,
                          help='hops that Eve attacks, e.g. 1,3')

        self.add_argument('--known-bits', type=int,
                          default=Settings.known_bits,
                          help='length of the appended known sequence')
        self.add_argument('--parity-block', type=int,
                          default=Settings.parity_block,
                          help='data bits per parity bit')

        self.add_argument('--out', type=Path, default=Settings.out,
                          help='report file, stdout if omitted')
        self.add_argument('--format', dest='report_format',
                          choices=Settings.report_formats,
                          default=Settings.report_format,
                          help='report format')
        self.add_argument('--dump-transcripts', action='store_true',
                          help='write per-session transcripts as JSON lines')

        self.add_argument('--workers', type=int, default=Settings.workers,
                          help='worker processes for trials')
        self.add_argument('--log-level', default=Settings.log_level,
                          choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'),
                          help='logging level')


def config_from_args(args: Namespace) -> ExperimentConfig:
    """Returns the unvalidated experiment configuration of parsed args"""

    return ExperimentConfig(protocol=args.protocol, n_bits=args.bits,
                            trials=args.trials, seed=args.seed,
                            angle_mode=args.angle_mode, theta=args.theta,
                            phi=args.phi, pair=args.pair, alpha=args.alpha,
                            beta=args.beta, adversary=args.adversary,
                            eve_basis=args.eve_basis,
                            eve_stages=tuple(args.eve_stages),
                            known_bits=args.known_bits,
                            parity_block=args.parity_block)
