#!/usr/bin/python3
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

threestage
==========

- Command line simulator of the three-stage protocol
- Run this script or ``python -m threestage`` to start an experiment.

**Provides**

* :func:`transcript_path`: Location of the transcript dump
* :func:`main`: Command line entry point

"""

from contextlib import ExitStack
import logging
from pathlib import Path
import sys
import traceback
from typing import List, Optional

try:
    from threestage.cli import ThreeStageArgumentParser, config_from_args
    from threestage.experiment import run_experiment
    from threestage.interfaces.report import (serialize_report,
                                              serialize_transcript)
    from threestage.lib.exceptions import ConfigurationError
except ImportError:
    from cli import ThreeStageArgumentParser, config_from_args
    from experiment import run_experiment
    from interfaces.report import serialize_report, serialize_transcript
    from lib.exceptions import ConfigurationError


LICENSE = "GNU GENERAL PUBLIC LICENSE Version 3"

logger = logging.getLogger(__name__)


def excepthook(exception_type, exception_value, exception_traceback):
    """Exception hook that reports uncaught exceptions on stderr"""

    traceback_msg = "".join(traceback.format_exception(exception_type,
                                                       exception_value,
                                                       exception_traceback))
    print(f"Error: {traceback_msg}\n", file=sys.stderr)


def transcript_path(out: Path) -> Path:
    """Returns the transcript file that accompanies the report file out"""

    return out.with_name(out.name + ".transcripts.jsonl")


def main(argv: Optional[List[str]] = None) -> int:
    """threestage main

    :param argv: Command line arguments, sys.argv[1:] if None
    :return: Exit status, 0 on success

    """

    sys.excepthook = excepthook

    parser = ThreeStageArgumentParser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=args.log_level,
                        format="%(levelname)s %(name)s: %(message)s")

    cfg = config_from_args(args)
    try:
        cfg.validate()
    except ConfigurationError as err:
        parser.error(str(err))

    with ExitStack() as stack:
        on_transcript = None
        if args.dump_transcripts:
            if args.out is None:
                transcript_file = sys.stdout
            else:
                path = transcript_path(args.out)
                transcript_file = stack.enter_context(
                    path.open("w", encoding="utf-8"))
                logger.info("Writing transcripts to %s", path)

            def on_transcript(transcript):
                transcript_file.write(serialize_transcript(transcript))

        try:
            report = run_experiment(cfg, workers=args.workers,
                                    on_transcript=on_transcript)
        except ConfigurationError as err:
            parser.error(str(err))

    text = serialize_report(report, args.report_format)
    if args.out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        args.out.write_text(text, encoding="utf-8")
        logger.info("Report written to %s", args.out)

    return 0


if __name__ == "__main__":
    sys.exit(main())
