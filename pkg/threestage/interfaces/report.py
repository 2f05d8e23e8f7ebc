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

This file contains the text formats of reports and transcripts.

Reports are written as one JSON document or as a two column CSV file of
field name and JSON encoded value. Transcripts are written as one JSON
document per session, so that a run can be dumped as JSON lines.

Complex amplitudes are written as ``[re, im]`` pairs. Floats use the
shortest representation that round-trips, fields keep declaration
order and empty logs are written as empty lists.

**Provides**

 * :func:`qubit2json`
 * :func:`json2qubit`
 * :func:`serialize_report`
 * :func:`parse_report`
 * :func:`serialize_transcript`
 * :func:`parse_transcript`

"""

import csv
from dataclasses import asdict, fields
import io
import json
from typing import Any, Callable, Dict, List, Union

try:
    from threestage.experiment import ExperimentReport
    from threestage.lib.exceptions import ParseError
    from threestage.model.channel import EveObservation
    from threestage.model.encoding import FrameVerdict, OrthogonalPair
    from threestage.model.protocol import (
        KeyDistOutcome, KeyDistTranscript, SessionTranscript, StageMessage,
        Status)
    from threestage.model.qubit import Qubit
except ImportError:
    from experiment import ExperimentReport
    from lib.exceptions import ParseError
    from model.channel import EveObservation
    from model.encoding import FrameVerdict, OrthogonalPair
    from model.protocol import (
        KeyDistOutcome, KeyDistTranscript, SessionTranscript, StageMessage,
        Status)
    from model.qubit import Qubit

Transcript = Union[SessionTranscript, KeyDistTranscript]

REPORT_FORMATS = ("json", "csv")


# Qubits and friends

def qubit2json(q: Qubit) -> List[List[float]]:
    """Returns [[re0, im0], [re1, im1]]"""

    return [[q.amp0.real, q.amp0.imag], [q.amp1.real, q.amp1.imag]]


def json2qubit(amps: Any) -> Qubit:
    """Returns the qubit of an [[re0, im0], [re1, im1]] list"""

    try:
        (re0, im0), (re1, im1) = amps
        return Qubit(complex(float(re0), float(im0)),
                     complex(float(re1), float(im1)))
    except (TypeError, ValueError) as err:
        raise ParseError(f"Invalid qubit {amps!r}: {err}") from err


def _pair2json(pair: OrthogonalPair) -> Dict[str, Any]:
    return {"name": pair.name, "state0": qubit2json(pair.state0),
            "state1": qubit2json(pair.state1)}


def _json2pair(data: Dict[str, Any]) -> OrthogonalPair:
    return OrthogonalPair(json2qubit(data["state0"]),
                          json2qubit(data["state1"]), data["name"])


def _message2json(msg: StageMessage) -> Dict[str, Any]:
    return {"session_id": msg.session_id, "bit_index": msg.bit_index,
            "stage": msg.stage, "payload": qubit2json(msg.payload)}


def _json2message(data: Dict[str, Any]) -> StageMessage:
    return StageMessage(data["session_id"], data["bit_index"], data["stage"],
                        json2qubit(data["payload"]))


def _observation2json(observation: EveObservation) -> Dict[str, Any]:
    return {"bit_index": observation.bit_index, "stage": observation.stage,
            "outcome": observation.outcome,
            "basis": _pair2json(observation.basis)}


def _json2observation(data: Dict[str, Any]) -> EveObservation:
    return EveObservation(data["bit_index"], data["stage"], data["outcome"],
                          _json2pair(data["basis"]))


def _verdict2json(verdict: FrameVerdict) -> Dict[str, Any]:
    return {"accepted": verdict.accepted,
            "parity_failures": list(verdict.parity_failures),
            "sequence_mismatch_positions":
                list(verdict.sequence_mismatch_positions)}


def _json2verdict(data: Dict[str, Any]) -> FrameVerdict:
    verdict = FrameVerdict(tuple(data["parity_failures"]),
                           tuple(data["sequence_mismatch_positions"]))
    if verdict.accepted != data["accepted"]:
        raise ParseError("Verdict acceptance contradicts its failure lists")
    return verdict


# Reports

def _report2dict(report: ExperimentReport) -> Dict[str, Any]:
    return asdict(report)


def _dict2report(data: Dict[str, Any]) -> ExperimentReport:
    names = [report_field.name for report_field in fields(ExperimentReport)]
    missing = [name for name in names if name not in data]
    unknown = [name for name in data if name not in names]
    if missing or unknown:
        msg = f"Report fields missing: {missing}, unknown: {unknown}"
        raise ParseError(msg)

    return ExperimentReport(**data)


def _report2csv(report: ExperimentReport) -> str:
    with io.StringIO() as csvfile:
        writer = csv.writer(csvfile, lineterminator="\n")
        writer.writerow(["field", "value"])
        for key, value in _report2dict(report).items():
            writer.writerow([key, json.dumps(value)])
        return csvfile.getvalue()


def _csv2report(text: str) -> ExperimentReport:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("Empty CSV report")
    if header != ["field", "value"]:
        raise ParseError(f"Unexpected CSV header {header!r}")

    data = {}
    for row in reader:
        if len(row) != 2:
            raise ParseError(f"CSV row {row!r} has not 2 cells")
        key, value = row
        try:
            data[key] = json.loads(value)
        except json.JSONDecodeError as err:
            raise ParseError(f"Field {key}: {err}") from err

    return _dict2report(data)


def serialize_report(report: ExperimentReport, fmt: str = "json") -> str:
    """Returns the canonical text of a report

    :param report: Report to be written
    :param fmt: `json` or `csv`

    """

    if fmt == "json":
        return json.dumps(_report2dict(report), indent=2) + "\n"
    if fmt == "csv":
        return _report2csv(report)
    raise ValueError(f"Report format {fmt!r} not in {REPORT_FORMATS}")


def parse_report(text: str, fmt: str = "json") -> ExperimentReport:
    """Reads a report written by :func:`serialize_report`

    :param text: Report text
    :param fmt: `json` or `csv`

    """

    if fmt == "csv":
        return _csv2report(text)
    if fmt != "json":
        raise ValueError(f"Report format {fmt!r} not in {REPORT_FORMATS}")

    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"Report is no valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ParseError("Report is no JSON object")

    return _dict2report(data)


# Transcripts

def _session2json(transcript: SessionTranscript) -> Dict[str, Any]:
    return {
        "kind": "three-stage",
        "config": transcript.config,
        "frame": list(transcript.frame),
        "messages": [_message2json(msg) for msg in transcript.messages],
        "observations": [_observation2json(observation)
                         for observation in transcript.observations],
        "decoded": list(transcript.decoded),
        "recovery_fidelities": list(transcript.recovery_fidelities),
        "verdict": _verdict2json(transcript.verdict),
        "status": transcript.status.value,
    }


def _json2session(data: Dict[str, Any]) -> SessionTranscript:
    return SessionTranscript(
        config=data["config"],
        frame=list(data["frame"]),
        messages=[_json2message(msg) for msg in data["messages"]],
        observations=[_json2observation(observation)
                      for observation in data["observations"]],
        decoded=list(data["decoded"]),
        recovery_fidelities=list(data["recovery_fidelities"]),
        verdict=_json2verdict(data["verdict"]),
        status=Status(data["status"]),
    )


def _keydist2json(transcript: KeyDistTranscript) -> Dict[str, Any]:
    public_state = transcript.public_state
    return {
        "kind": "keydist",
        "config": transcript.config,
        "public_state":
            None if public_state is None else qubit2json(public_state),
        "issued_states": [qubit2json(q) for q in transcript.issued_states],
        "outcomes": [{"alice_state": qubit2json(outcome.alice_state),
                      "bob_state": qubit2json(outcome.bob_state),
                      "agreement_fidelity": outcome.agreement_fidelity}
                     for outcome in transcript.outcomes],
        "observations": [_observation2json(observation)
                         for observation in transcript.observations],
        "events": list(transcript.events),
    }


def _json2keydist(data: Dict[str, Any]) -> KeyDistTranscript:
    public_state = data["public_state"]
    return KeyDistTranscript(
        config=data["config"],
        public_state=None if public_state is None
        else json2qubit(public_state),
        issued_states=[json2qubit(q) for q in data["issued_states"]],
        outcomes=[KeyDistOutcome(json2qubit(outcome["alice_state"]),
                                 json2qubit(outcome["bob_state"]))
                  for outcome in data["outcomes"]],
        observations=[_json2observation(observation)
                      for observation in data["observations"]],
        events=list(data["events"]),
    )


_kind2reader: Dict[str, Callable[[Dict[str, Any]], Transcript]] = {
    "three-stage": _json2session,
    "keydist": _json2keydist,
}


def serialize_transcript(transcript: Transcript) -> str:
    """Returns a transcript as single line JSON document"""

    if isinstance(transcript, SessionTranscript):
        data = _session2json(transcript)
    elif isinstance(transcript, KeyDistTranscript):
        data = _keydist2json(transcript)
    else:
        raise TypeError(f"{transcript!r} is no transcript")

    return json.dumps(data) + "\n"


def parse_transcript(text: str) -> Transcript:
    """Reads a transcript written by :func:`serialize_transcript`"""

    try:
        data = json.loads(text)
        reader = _kind2reader[data["kind"]]
        return reader(data)
    except ParseError:
        raise
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise ParseError(f"Invalid transcript: {err!r}") from err
