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
test_threestage
===============

Unit tests for the command line entry point in threestage.py

"""

import json

import pytest

from ..interfaces.report import parse_report, parse_transcript
from ..model.protocol import KeyDistTranscript, SessionTranscript
from ..threestage import main, transcript_path


def test_report_to_stdout(capsys):
    assert main(["--bits", "8", "--trials", "2", "--seed", "3"]) == 0

    report = parse_report(capsys.readouterr().out)

    assert report.trials == 2
    assert report.config["seed"] == 3
    assert report.bit_error_rate == 0


def test_csv_report_file(tmp_path, capsys):
    out = tmp_path / "report.csv"

    assert main(["--protocol", "keydist", "--bits", "5", "--out", str(out),
                 "--format", "csv"]) == 0

    report = parse_report(out.read_text(encoding="utf-8"), "csv")
    assert report.data_bits == 5
    assert capsys.readouterr().out == ""


def test_dump_transcripts(tmp_path):
    out = tmp_path / "run.json"

    main(["--bits", "8", "--trials", "3", "--adversary", "intercept-resend",
          "--out", str(out), "--dump-transcripts"])

    lines = transcript_path(out).read_text(encoding="utf-8").splitlines()
    transcripts = [parse_transcript(line) for line in lines]

    assert transcript_path(out).name == "run.json.transcripts.jsonl"
    assert len(transcripts) == 3
    assert all(isinstance(t, SessionTranscript) for t in transcripts)
    assert json.loads(out.read_text(encoding="utf-8"))["trials"] == 3


def test_transcript_file_is_json_lines(tmp_path):
    """One JSON document per line, no blank lines in between"""

    out = tmp_path / "run.json"

    main(["--bits", "8", "--trials", "3", "--out", str(out),
          "--dump-transcripts"])

    text = transcript_path(out).read_text(encoding="utf-8")
    lines = text.splitlines()

    assert text.endswith("\n")
    assert "" not in lines
    assert len(lines) == 3
    assert all(json.loads(line)["kind"] == "three-stage" for line in lines)


def test_dump_transcripts_stdout(capsys):
    main(["--protocol", "keydist-authority", "--bits", "2", "--trials", "2",
          "--dump-transcripts"])

    lines = capsys.readouterr().out.splitlines()

    assert isinstance(parse_transcript(lines[0]), KeyDistTranscript)
    assert isinstance(parse_transcript(lines[1]), KeyDistTranscript)
    assert parse_report("\n".join(lines[2:])).trials == 2


def test_deterministic_output(tmp_path):
    """Same arguments give the same report apart from the wall time"""

    reports = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        main(["--bits", "16", "--trials", "4", "--seed", "11",
              "--adversary", "intercept-resend", "--eve-stages", "1,3",
              "--out", str(out)])
        report = json.loads(out.read_text(encoding="utf-8"))
        report.pop("wall_time")
        reports.append(report)

    assert reports[0] == reports[1]


param_test_configuration_errors = [
    ["--bits", "12"],
    ["--trials", "0"],
    ["--angle-mode", "fixed", "--theta", "0.5"],
    ["--pair", "general", "--alpha", "0.9", "--beta", "0.9"],
    ["--known-bits", "-1"],
    ["--workers", "0"],
]


@pytest.mark.parametrize("argv", param_test_configuration_errors)
def test_configuration_errors(argv):
    """Invalid configurations exit with status 2"""

    with pytest.raises(SystemExit) as exc:
        main(argv)

    assert exc.value.code == 2
