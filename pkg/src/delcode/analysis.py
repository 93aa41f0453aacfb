"""Size and redundancy reports, Singleton-gap accounting, and the seeded
Monte-Carlo deletion-channel harness.

All logarithms are base 2, so every number below is in bits.
"""

import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .errors import DecodeError
from .model import delete_positions, draw_deletion_pattern
from .multfree import MultFreeCodeSpec, code_size, decode, encode_index

_LOG_AGREEMENT = 1e-10  # direct vs log-space evaluation must match this closely


def _log2(x) -> float:
    """log2 that stays finite for big integers and Fractions."""
    if isinstance(x, Fraction):
        return math.log2(x.numerator) - math.log2(x.denominator)
    return math.log2(x)


def size_lower_bound(q: int, n: int, t: int) -> tuple[Fraction, float]:
    """Guaranteed composed-code size n!/(2n)^(3t-1) * C(q,n)/(2q)^t.

    Returns the exact rational value and its log2.  The log2 is evaluated twice,
    directly and as a log-space sum over the falling factorial, and the two
    readings must agree to ten decimal places.
    """
    if not 1 <= n <= q:
        raise ValueError(f"need 1 <= n <= q, got n={n}, q={q}")
    if t < 1:
        raise ValueError("t must be at least 1")
    exact = Fraction(math.factorial(n), (2 * n) ** (3 * t - 1)) * Fraction(
        math.comb(q, n), (2 * q) ** t
    )
    direct = _log2(exact)
    log_space = (
        sum(math.log2(q - i) for i in range(n))
        - (3 * t - 1) * math.log2(2 * n)
        - t * math.log2(2 * q)
    )
    if abs(direct - log_space) > _LOG_AGREEMENT:
        raise ArithmeticError(f"log-space evaluation drifted: {direct} vs {log_space}")
    return exact, direct


def redundancy(q: int, n: int, code_size) -> float:
    """Bits given up against the full q-ary space: n*log2(q) - log2(|code|)."""
    if code_size <= 0:
        raise ValueError("code size must be positive")
    return n * math.log2(q) - _log2(code_size)


def redundancy_bound(q: int, n: int, t: int) -> float:
    """Guaranteed redundancy t*log2(q) + (3t-1)*log2(n) + (4t-1)."""
    if q <= n:
        raise ValueError(f"need q > n, got q={q}, n={n}")
    return t * math.log2(q) + (3 * t - 1) * math.log2(n) + (4 * t - 1)


@dataclass(frozen=True)
class BoundReport:
    """Bit-level accounting for one (q, n, t) point, optionally against a
    materialized code size.  epsilon and delta are display-only knobs for the
    asymptotic annotations and are never folded into the bound."""

    q: int
    n: int
    t: int
    size_lower_bound: float
    log2_size_lower_bound: float
    redundancy_bound: float
    singleton_log_size: float
    log2_multfree_count: float  # exact finite-n value sum_i log2(q - i)
    alpha: float  # log(q) / log(n)
    code_size: float | None = None
    log2_code_size: float | None = None
    redundancy_actual: float | None = None
    eta: float | None = None  # Singleton gap n - t - log2|C|/log2(q)
    alpha_threshold: float | None = None  # (3t-1)/eta; alpha above it closes the gap
    alpha_exceeds_threshold: bool | None = None
    epsilon: float | None = None
    delta: float | None = None
    delta_adjusted_bound: float | None = None  # 4t-1 term replaced by delta*t

    def to_json_dict(self) -> dict:
        return asdict(self)


def singleton_report(
    q: int,
    n: int,
    t: int,
    code_size=None,
    epsilon: float | None = None,
    delta: float | None = None,
) -> BoundReport:
    """Full bound report: guaranteed size, redundancy bound, Singleton-gap eta
    for a supplied code size, and the alpha threshold that closes the gap."""
    exact, log2_bound = size_lower_bound(q, n, t)
    try:
        bound_float = float(exact)
    except OverflowError:
        bound_float = math.inf
    log_q = math.log2(q)
    report = {
        "q": q,
        "n": n,
        "t": t,
        "size_lower_bound": bound_float,
        "log2_size_lower_bound": log2_bound,
        "redundancy_bound": redundancy_bound(q, n, t),
        "singleton_log_size": (n - t) * log_q,
        "log2_multfree_count": sum(math.log2(q - i) for i in range(n)),
        "alpha": log_q / math.log2(n) if n > 1 else math.inf,
        "epsilon": epsilon,
        "delta": delta,
    }
    if delta is not None:
        report["delta_adjusted_bound"] = t * log_q + (3 * t - 1) * math.log2(n) + delta * t
    if code_size is not None:
        log2_size = _log2(code_size)
        eta = n - t - log2_size / log_q
        threshold = (3 * t - 1) / eta if eta != 0 else math.inf
        try:
            size_float = float(code_size)
        except OverflowError:
            size_float = math.inf
        report.update(
            code_size=size_float,
            log2_code_size=log2_size,
            redundancy_actual=redundancy(q, n, code_size),
            eta=eta,
            alpha_threshold=threshold,
            alpha_exceeds_threshold=bool(report["alpha"] > threshold),
        )
    return BoundReport(**report)


@dataclass(frozen=True)
class SimulationReport:
    """Tally of one Monte-Carlo channel run, broken down by deletion count."""

    trials: int
    t_max: int
    seed: int
    successes: int
    failures: int
    by_weight: dict

    @property
    def all_recovered(self) -> bool:
        return self.failures == 0

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "t_max": self.t_max,
            "seed": self.seed,
            "successes": self.successes,
            "failures": self.failures,
            "by_weight": {str(w): dict(c) for w, c in sorted(self.by_weight.items())},
        }


def _shard_seed(seed: int, shard: int) -> int:
    return seed * 1_000_003 + shard


def simulate(
    spec: MultFreeCodeSpec, trials: int, t_max: int, seed: int, shards: int = 1
) -> SimulationReport:
    """Replay codewords through the seeded deletion channel and tally recovery.

    Each trial draws a uniform codeword and a deletion pattern whose size is
    uniform in {0..t_max}, decodes, and records success per deletion count.
    Trials are split across shards with seeds derived from (seed, shard), so the
    merged tally is reproducible regardless of how the work would be spread.
    """
    if trials < 0 or shards < 1:
        raise ValueError("need trials >= 0 and shards >= 1")
    if not 0 <= t_max <= spec.n:
        raise ValueError(f"t_max {t_max} outside [0, {spec.n}]")
    total = code_size(spec)
    if total == 0:
        raise ValueError("the spec describes an empty code")

    by_weight = {w: {"trials": 0, "successes": 0, "failures": 0} for w in range(t_max + 1)}
    successes = failures = 0
    base, extra = divmod(trials, shards)
    for shard in range(shards):
        rng = random.Random(_shard_seed(seed, shard))
        for _ in range(base + (1 if shard < extra else 0)):
            x = encode_index(spec, rng.randrange(total))
            pattern = draw_deletion_pattern(rng, spec.n, t_max)
            y = delete_positions(x, pattern)
            try:
                ok = decode(spec, y) == x
            except DecodeError:
                ok = False
            slot = by_weight[pattern.size]
            slot["trials"] += 1
            if ok:
                slot["successes"] += 1
                successes += 1
            else:
                slot["failures"] += 1
                failures += 1
    return SimulationReport(trials, t_max, seed, successes, failures, by_weight)
