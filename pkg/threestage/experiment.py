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

Seeded Monte Carlo experiments

A run consists of independent trials. Trial ``i`` draws everything from
its own stream derived from ``(seed, i)``, so a run is fully determined by
its :class:`ExperimentConfig` and trials can run in any order or in
parallel. Per-trial :class:`TrialResult` values are merged with a
commutative, associative :meth:`TrialResult.merge`.

**Provides**

 * :class:`ExperimentConfig`
 * :class:`TrialResult`
 * :class:`ExperimentReport`
 * :func:`run_trial`
 * :func:`run_experiment`

"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import reduce
import logging
import math
import time
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy

try:
    from threestage.settings import Settings
    from threestage.lib.exceptions import ConfigurationError, NotNormalized
    from threestage.lib.hashing import known_sequence_from_seed
    from threestage.lib.information import (
        independence_pvalue, mutual_information, mutual_information_stderr)
    from threestage.lib.prng import mix_seed, trial_stream
    from threestage.model.channel import (
        STAGES, AdversarialChannel, AdversaryStrategy, InterceptResend,
        Passthrough, Substitute, eve_statistics)
    from threestage.model.encoding import (
        FrameSpec, OrthogonalPair, standard_pairs)
    from threestage.model.protocol import (
        AnglePolicy, KeyDistTranscript, SessionConfig, SessionTranscript,
        Status, run_key_distribution, run_three_stage)
except ImportError:
    from settings import Settings
    from lib.exceptions import ConfigurationError, NotNormalized
    from lib.hashing import known_sequence_from_seed
    from lib.information import (
        independence_pvalue, mutual_information, mutual_information_stderr)
    from lib.prng import mix_seed, trial_stream
    from model.channel import (
        STAGES, AdversarialChannel, AdversaryStrategy, InterceptResend,
        Passthrough, Substitute, eve_statistics)
    from model.encoding import (
        FrameSpec, OrthogonalPair, standard_pairs)
    from model.protocol import (
        AnglePolicy, KeyDistTranscript, SessionConfig, SessionTranscript,
        Status, run_key_distribution, run_three_stage)

logger = logging.getLogger(__name__)

AGREEMENT_TOL = 1e-9
"""Key distribution rounds below 1 - AGREEMENT_TOL fidelity disagree"""

Transcript = Union[SessionTranscript, KeyDistTranscript]


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete description of a run"""

    protocol: str = Settings.protocol
    n_bits: int = Settings.bits
    trials: int = Settings.trials
    seed: int = Settings.seed
    angle_mode: str = Settings.angle_mode
    theta: Optional[float] = Settings.theta
    phi: Optional[float] = Settings.phi
    pair: str = Settings.pair
    alpha: Optional[float] = Settings.alpha
    beta: Optional[float] = Settings.beta
    adversary: str = Settings.adversary
    eve_basis: str = Settings.eve_basis
    eve_stages: Tuple[int, ...] = Settings.eve_stages
    known_bits: int = Settings.known_bits
    parity_block: int = Settings.parity_block

    def __post_init__(self):
        object.__setattr__(self, "eve_stages",
                           tuple(sorted(set(self.eve_stages))))

    @classmethod
    def from_settings(cls, settings: Settings) -> "ExperimentConfig":
        """Returns the configuration described by settings"""

        return cls(protocol=settings.protocol, n_bits=settings.bits,
                   trials=settings.trials, seed=settings.seed,
                   angle_mode=settings.angle_mode, theta=settings.theta,
                   phi=settings.phi, pair=settings.pair,
                   alpha=settings.alpha, beta=settings.beta,
                   adversary=settings.adversary,
                   eve_basis=settings.eve_basis,
                   eve_stages=tuple(settings.eve_stages),
                   known_bits=settings.known_bits,
                   parity_block=settings.parity_block)

    @property
    def is_three_stage(self) -> bool:
        return self.protocol == "three-stage"

    def validate(self) -> "ExperimentConfig":
        """Returns self if valid, raises ConfigurationError otherwise"""

        def choice(name: str, value: str, choices: Tuple[str, ...]):
            if value not in choices:
                msg = f"{name} {value!r} not in {', '.join(choices)}"
                raise ConfigurationError(msg)

        choice("Protocol", self.protocol, Settings.protocols)
        choice("Angle mode", self.angle_mode, Settings.angle_modes)
        choice("Pair", self.pair, Settings.pairs)
        choice("Adversary", self.adversary, Settings.adversaries)
        choice("Eve basis", self.eve_basis, Settings.eve_bases)

        if self.trials < 1:
            raise ConfigurationError(f"Trials {self.trials} < 1")
        if self.n_bits < 1:
            raise ConfigurationError(f"Bits {self.n_bits} < 1")
        if self.known_bits < 0:
            raise ConfigurationError(f"Known bits {self.known_bits} < 0")
        if self.parity_block < 1:
            raise ConfigurationError(f"Parity block {self.parity_block} < 1")
        if self.is_three_stage and self.n_bits % self.parity_block:
            msg = "Parity block {} does not divide {} bits"
            raise ConfigurationError(msg.format(self.parity_block,
                                                self.n_bits))

        if self.angle_mode == "fixed":
            if self.theta is None or self.phi is None:
                raise ConfigurationError("Fixed angles need theta and phi")
            if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
                raise ConfigurationError("Fixed angles must be finite")

        if self.pair == "general":
            if self.alpha is None or self.beta is None:
                raise ConfigurationError("General pair needs alpha and beta")
            try:
                self.encoding_pair()
            except (NotNormalized, ValueError) as err:
                raise ConfigurationError(f"General pair: {err}") from err

        if self.adversary != "none":
            if not self.eve_stages:
                raise ConfigurationError("Eve needs at least one stage")
            if not set(self.eve_stages) <= STAGES:
                msg = f"Eve stages {self.eve_stages} not within 1, 2, 3"
                raise ConfigurationError(msg)

        return self

    def encoding_pair(self) -> OrthogonalPair:
        """Returns the agreed encoding"""

        pairs = standard_pairs()
        if self.pair == "general":
            return pairs.general(self.alpha, self.beta)
        return pairs[self.pair]

    def angle_policy(self) -> AnglePolicy:
        if self.angle_mode == "fixed":
            return AnglePolicy.fixed(self.theta, self.phi)
        return AnglePolicy.random()

    def strategy(self) -> AdversaryStrategy:
        """Returns Eve's strategy"""

        if self.adversary == "intercept-resend":
            basis = None
            if self.eve_basis != "random":
                basis = standard_pairs()[self.eve_basis]
            return InterceptResend(basis,
                                   frozenset(self.eve_stages))
        if self.adversary == "substitute":
            return Substitute(frozenset(self.eve_stages))
        return Passthrough()

    def session_config(self, trial: int) -> SessionConfig:
        """Returns the session configuration of trial"""

        frame = None
        if self.is_three_stage:
            known = known_sequence_from_seed(mix_seed(self.seed, trial),
                                             self.known_bits)
            frame = FrameSpec(self.n_bits, self.parity_block, known)

        return SessionConfig(frame=frame, pair=self.encoding_pair(),
                             angles=self.angle_policy(),
                             session_id=f"trial-{trial}")

    def echo(self) -> Dict[str, Any]:
        """Returns the configuration as plain values"""

        echo = asdict(self)
        echo["eve_stages"] = list(self.eve_stages)
        return echo


@dataclass(frozen=True)
class TrialResult:
    """Counts of one or more trials

    Merging only adds counts and takes minima, so the merged result does
    not depend on the order of the trials.

    """

    sessions: int = 0
    delivered: int = 0
    data_bits: int = 0
    delivered_bits: int = 0
    delivered_errors: int = 0
    raw_errors: int = 0
    rounds: int = 0
    disagreements: int = 0
    eve_counts: Tuple[Tuple[int, int], Tuple[int, int]] = ((0, 0), (0, 0))
    eve_observations: int = 0
    min_recovery_fidelity: Optional[float] = None
    min_agreement_fidelity: Optional[float] = None

    def merge(self, other: "TrialResult") -> "TrialResult":
        """Returns the combined counts of self and other"""

        def minimum(a: Optional[float], b: Optional[float]):
            values = [value for value in (a, b) if value is not None]
            return min(values) if values else None

        counts = numpy.add(self.eve_counts, other.eve_counts)

        return TrialResult(
            sessions=self.sessions + other.sessions,
            delivered=self.delivered + other.delivered,
            data_bits=self.data_bits + other.data_bits,
            delivered_bits=self.delivered_bits + other.delivered_bits,
            delivered_errors=self.delivered_errors + other.delivered_errors,
            raw_errors=self.raw_errors + other.raw_errors,
            rounds=self.rounds + other.rounds,
            disagreements=self.disagreements + other.disagreements,
            eve_counts=tuple(tuple(int(n) for n in row) for row in counts),
            eve_observations=self.eve_observations + other.eve_observations,
            min_recovery_fidelity=minimum(self.min_recovery_fidelity,
                                          other.min_recovery_fidelity),
            min_agreement_fidelity=minimum(self.min_agreement_fidelity,
                                           other.min_agreement_fidelity),
        )


@dataclass
class ExperimentReport:
    """Aggregated statistics of a run

    Rates are fractions in [0, 1], information is measured in bits.
    Mutual information fields are None if Eve made no observation or the
    protocol has no hidden bit.

    """

    config: Dict[str, Any]
    trials: int
    sessions_delivered: int
    sessions_rejected: int
    data_bits: int
    delivered_bits: int
    bit_errors: int
    bit_error_rate: float
    raw_bit_error_rate: float
    detection_rate: float
    min_recovery_fidelity: Optional[float]
    min_agreement_fidelity: Optional[float]
    eve_stage: Optional[int]
    eve_observations: int
    eve_counts: List[List[int]]
    eve_mutual_information_bits: Optional[float]
    eve_mutual_information_stderr: Optional[float]
    eve_independence_pvalue: Optional[float]
    verdict_counts: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0


def _eve_stage(cfg: ExperimentConfig) -> Optional[int]:
    """Stage whose observations are analysed, None without measurements"""

    if cfg.adversary != "intercept-resend" or not cfg.eve_stages:
        return None
    return min(cfg.eve_stages)


def _three_stage_result(cfg: ExperimentConfig,
                        transcript: SessionTranscript) -> TrialResult:
    delivered = transcript.status is Status.DELIVERED
    errors = transcript.bit_errors
    data_bits = len(transcript.data)

    stage = _eve_stage(cfg)
    counts = numpy.zeros((2, 2), dtype=numpy.int64)
    if stage is not None:
        counts = eve_statistics(transcript.observations, transcript.frame,
                                stage)

    return TrialResult(
        sessions=1,
        delivered=int(delivered),
        data_bits=data_bits,
        delivered_bits=data_bits if delivered else 0,
        delivered_errors=errors if delivered else 0,
        raw_errors=errors,
        eve_counts=tuple(tuple(int(n) for n in row) for row in counts),
        eve_observations=len(transcript.observations),
        min_recovery_fidelity=min(transcript.recovery_fidelities),
    )


def _keydist_result(transcript: KeyDistTranscript) -> TrialResult:
    fidelities = transcript.agreement_fidelities
    disagreements = sum(value < 1.0 - AGREEMENT_TOL for value in fidelities)

    return TrialResult(
        sessions=1,
        rounds=len(fidelities),
        disagreements=disagreements,
        eve_observations=len(transcript.observations),
        min_agreement_fidelity=min(fidelities),
    )


def run_trial(cfg: ExperimentConfig, trial: int, keep_transcript: bool = True
              ) -> Tuple[TrialResult, Optional[Transcript]]:
    """Runs trial number `trial` of a run

    :param cfg: Validated run configuration
    :param trial: Trial index
    :param keep_transcript: Return the transcript, else None
    :return: Counts of the trial and its transcript

    """

    rng = trial_stream(cfg.seed, trial)
    session = cfg.session_config(trial)
    channel = AdversarialChannel(cfg.strategy())

    if cfg.is_three_stage:
        data = [int(bit) for bit in rng.integers(0, 2, cfg.n_bits)]
        transcript = run_three_stage(data, session, channel, rng)
        result = _three_stage_result(cfg, transcript)
    else:
        authority = cfg.protocol == "keydist-authority"
        transcript = run_key_distribution(cfg.n_bits, session, channel, rng,
                                          authority=authority)
        result = _keydist_result(transcript)

    return result, transcript if keep_transcript else None


def _run_trial_args(args: Tuple[ExperimentConfig, int, bool]):
    return run_trial(*args)


def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else 0.0


def make_report(cfg: ExperimentConfig, result: TrialResult,
                wall_time: float = 0.0) -> ExperimentReport:
    """Returns the report of a run from its merged counts"""

    rejected = result.sessions - result.delivered

    if cfg.is_three_stage:
        bit_errors = result.delivered_errors
        bit_error_rate = _ratio(result.delivered_errors,
                                result.delivered_bits)
        raw_bit_error_rate = _ratio(result.raw_errors, result.data_bits)
        detection_rate = _ratio(rejected, result.sessions)
        verdict_counts = {Status.DELIVERED.value: result.delivered,
                          Status.REJECTED.value: rejected}
    else:
        bit_errors = result.disagreements
        bit_error_rate = raw_bit_error_rate = _ratio(result.disagreements,
                                                     result.rounds)
        detection_rate = 0.0
        verdict_counts = {"Agreed": result.rounds - result.disagreements,
                          "Disagreed": result.disagreements}

    stage = _eve_stage(cfg) if cfg.is_three_stage else None
    counts = [list(row) for row in result.eve_counts]
    mi = stderr = pvalue = None
    if stage is not None and sum(map(sum, counts)):
        mi = mutual_information(counts)
        stderr = mutual_information_stderr(counts)
        pvalue = independence_pvalue(counts)

    return ExperimentReport(
        config=cfg.echo(),
        trials=result.sessions,
        sessions_delivered=result.delivered if cfg.is_three_stage else 0,
        sessions_rejected=rejected if cfg.is_three_stage else 0,
        data_bits=result.data_bits if cfg.is_three_stage else result.rounds,
        delivered_bits=result.delivered_bits,
        bit_errors=bit_errors,
        bit_error_rate=bit_error_rate,
        raw_bit_error_rate=raw_bit_error_rate,
        detection_rate=detection_rate,
        min_recovery_fidelity=result.min_recovery_fidelity,
        min_agreement_fidelity=result.min_agreement_fidelity,
        eve_stage=stage,
        eve_observations=result.eve_observations,
        eve_counts=counts,
        eve_mutual_information_bits=mi,
        eve_mutual_information_stderr=stderr,
        eve_independence_pvalue=pvalue,
        verdict_counts=verdict_counts,
        wall_time=wall_time,
    )


def run_experiment(cfg: ExperimentConfig, workers: int = 1,
                   on_transcript: Optional[Callable[[Transcript], None]] = None
                   ) -> ExperimentReport:
    """Runs all trials of cfg and aggregates them

    :param cfg: Run configuration
    :param workers: Number of worker processes, 1 runs in this process
    :param on_transcript: Called with every transcript in trial order
    :return: Report, identical for identical cfg apart from wall_time

    """

    cfg.validate()
    if workers < 1:
        raise ConfigurationError(f"Workers {workers} < 1")

    logger.info("Running %d %s trials with seed %d on %d worker(s)",
                cfg.trials, cfg.protocol, cfg.seed, workers)

    start = time.perf_counter()
    keep = on_transcript is not None
    jobs = [(cfg, trial, keep) for trial in range(cfg.trials)]

    def collect(outcomes) -> List[TrialResult]:
        results = []
        for result, transcript in outcomes:
            if on_transcript is not None:
                on_transcript(transcript)
            results.append(result)
        return results

    if workers == 1:
        results = collect(map(_run_trial_args, jobs))
    else:
        chunksize = max(1, cfg.trials // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = collect(executor.map(_run_trial_args, jobs,
                                           chunksize=chunksize))

    merged = reduce(TrialResult.merge, results, TrialResult())
    wall_time = time.perf_counter() - start

    report = make_report(cfg, merged, wall_time)
    logger.info("Finished %d trials in %.3f s: BER %r, detection rate %r",
                report.trials, wall_time, report.bit_error_rate,
                report.detection_rate)

    return report
