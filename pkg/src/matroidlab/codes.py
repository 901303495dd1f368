"""Linear codes as represented matroids: parameters, asymptotic-goodness
probes, the binary entropy threshold and its graphic counterpart, the
cut-code degree bound, and Monte Carlo maximum-likelihood decoding over a
binary symmetric channel.

A code and a represented matroid are the same object; distance is the
cogirth (minimum weight of the row space), length the ground set size,
dimension the rank.

The ML simulation transmits the zero codeword (linearity makes the error
rate codeword-independent; the tests check this statistically), flips
bits i.i.d., and decodes to the nearest codeword by exhaustive search.
Ties are scored fractionally: a tie among t codewords that includes the
transmitted one counts (t-1)/t of an error, which is the exact error
probability of a uniform tie-breaking ML decoder.  Randomness is
counter-based: block b of trials uses Philox key (seed, b), so any
partition of blocks over workers reproduces the same stream.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    CapExceeded,
    Disconnected,
    DomainError,
    EmptyCode,
    NotBinary,
)
from .field import make_field
from .linalg import min_weight
from .matroid import ReprMatroid

DEFAULT_CODEWORD_CAP = 1 << 14
MC_BLOCK = 1 << 14


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int | None
    rate: Fraction
    rel_dist: Fraction | None


class CodeView:
    """A represented matroid read as a linear code."""

    def __init__(self, matroid: ReprMatroid, name=None):
        self.matroid = matroid
        self.name = name
        self._params = None

    def params(self, workers=1) -> CodeParams:
        if self._params is None:
            self._params = code_params(self.matroid, workers=workers)
        return self._params

    def __repr__(self):
        return f"CodeView({self.name or self.matroid!r})"


@dataclass(frozen=True)
class ChannelParams:
    """BSC parameters for threshold work and simulation."""

    p: float
    R: float | None = None
    eps: float | None = None
    seed: int = 0
    trials: int = 10000

    def __post_init__(self):
        if not 0 <= self.p < 0.5:
            raise DomainError("bit-error probability must lie in [0, 1/2)")
        if self.R is not None and not 0 < self.R < 1:
            raise DomainError("rate must lie in (0, 1)")
        if self.eps is not None and not 0 < self.eps < 1:
            raise DomainError("probability threshold must lie in (0, 1)")
        if self.trials < 1:
            raise DomainError("trial count must be positive")


def code_params(M: ReprMatroid, workers=1) -> CodeParams:
    """(n, k, d, rate, relative distance); d is None for the zero code."""
    n = M.size
    if n == 0:
        raise EmptyCode("code of length 0")
    k = M.rank
    d, _ = min_weight(M.space, workers=workers)
    return CodeParams(n, k, d, Fraction(k, n),
                      None if d is None else Fraction(d, n))


@dataclass(frozen=True)
class ProbeVerdict:
    index: int
    n: int
    k: int
    d: int | None
    rate: Fraction
    rel_dist: Fraction
    good: bool


def good_family_probe(family, eps, horizon=10):
    """Check rate >= eps and relative distance >= eps for each code.

    Returns (verdicts, best_eps) where best_eps is the largest bound the
    whole sampled family sustains."""
    verdicts = []
    best = None
    for i, item in enumerate(family):
        if i >= horizon:
            break
        M = item.matroid if isinstance(item, CodeView) else item
        cp = code_params(M)
        rel = cp.rel_dist if cp.rel_dist is not None else Fraction(0)
        good = cp.rate >= eps and rel >= eps
        verdicts.append(ProbeVerdict(i, cp.n, cp.k, cp.d, cp.rate, rel, good))
        floor = min(cp.rate, rel)
        best = floor if best is None else min(best, floor)
    return verdicts, (best if best is not None else Fraction(0))


# ---------------------------------------------------------------------------
# threshold functions
# ---------------------------------------------------------------------------

def shannon_f(p: float) -> float:
    """f(p) = 1 + p log2 p + (1-p) log2(1-p) on (0, 1/2]."""
    if not 0 < p <= 0.5:
        raise DomainError("p must lie in (0, 1/2]")
    return 1.0 + p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p)


def theta_binary(R: float, tol=1e-12) -> float:
    """Inverse of shannon_f on (0, 1/2), by bisection to absolute tol."""
    if not 0 < R < 1:
        raise DomainError("R must lie in (0, 1)")
    lo, hi = 0.0, 0.5  # f(lo+) = 1, f(hi) = 0; f decreasing
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if shannon_f(mid) > R:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


THETA_GRAPHIC_STATUS = "conjectured"  # published for regular graphs only


def theta_graphic(R):
    """(1 - sqrt(R))^2 / (2 (1 + R)); exact Fractions stay exact when
    sqrt(R) is rational.  Treat the value as conjectural."""
    if not 0 < R < 1:
        raise DomainError("R must lie in (0, 1)")
    if isinstance(R, Fraction):
        a, b = R.numerator, R.denominator
        ra, rb = math.isqrt(a), math.isqrt(b)
        if ra * ra == a and rb * rb == b:
            s = Fraction(ra, rb)
            return (1 - s) ** 2 / (2 * (1 + R))
        R = float(R)
    s = math.sqrt(R)
    return (1 - s) ** 2 / (2 * (1 + R))


# ---------------------------------------------------------------------------
# cut codes of graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutBoundReport:
    n_vertices: int
    n_edges: int
    distance: int
    min_degree: int
    rate_cut: Fraction
    rate_cycle: Fraction
    delta_stated: float      # 1 / (2 (1-R)) as printed in the source lemma
    delta_degree: float      # 2|E| / |V|, the handshake bound actually used
    holds: bool


def cut_code_distance_bound(G, R) -> CutBoundReport:
    """Distance of the cut code of a connected graph against both bound
    candidates; see the module notes on the two rate conventions."""
    from .constructions import graphic

    if not G.is_connected():
        raise Disconnected("cut code bound needs a connected graph")
    nv, ne = len(G.vertices), len(G.edges)
    if ne == 0:
        raise EmptyCode("graph has no edges")
    if not 0 < R < 1:
        raise DomainError("R must lie in (0, 1)")
    M = graphic(G, make_field(2, 1))
    d, _ = min_weight(M.space)
    mindeg = G.min_degree()
    delta_stated = 1.0 / (2.0 * (1.0 - R))
    delta_degree = 2.0 * ne / nv
    return CutBoundReport(
        n_vertices=nv,
        n_edges=ne,
        distance=d,
        min_degree=mindeg,
        rate_cut=Fraction(nv - 1, ne),
        rate_cycle=Fraction(ne - nv + 1, ne),
        delta_stated=delta_stated,
        delta_degree=delta_degree,
        holds=d <= delta_degree,
    )


# ---------------------------------------------------------------------------
# Monte Carlo ML decoding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MLEstimate:
    p: float
    trials: int
    seed: int
    errors: float          # fractional tie accounting, exact sum
    rate: float
    ci_lo: float
    ci_hi: float
    z: float


def _codeword_table(M: ReprMatroid, cap):
    if M.field.q != 2:
        raise NotBinary("the simulated channel is binary")
    k, n = M.rank, M.size
    if 2 ** k > cap:
        raise CapExceeded(f"2^{k} codewords exceeds cap {cap}")
    G = np.array([list(row) for row in M.space.basis], dtype=np.uint8)
    G = G.reshape(k, n)
    msgs = np.arange(2 ** k, dtype=np.uint32)
    bits = ((msgs[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)
    return (bits @ G) % 2


def wilson_interval(x: float, n: int, z: float = 3.0):
    """Wilson score interval for x successes in n trials."""
    if n == 0:
        return 0.0, 1.0
    phat = x / n
    denom = 1.0 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _mc_block(codewords, true_idx, p, seed, block_idx, count):
    n = codewords.shape[1]
    rng = np.random.Generator(np.random.Philox(key=[seed, block_idx]))
    flips = rng.random((count, n)) < p
    received = codewords[true_idx][None, :] ^ flips.astype(np.uint8)
    dists = (received[:, None, :] != codewords[None, :, :]).sum(axis=2)
    dmin = dists.min(axis=1)
    dtrue = dists[:, true_idx]
    hard = int((dtrue > dmin).sum())
    frac = Fraction(0)
    tied_rows = np.nonzero(dtrue == dmin)[0]
    if len(tied_rows):
        counts = (dists[tied_rows] == dmin[tied_rows, None]).sum(axis=1)
        for t in counts:
            if t > 1:
                frac += Fraction(int(t) - 1, int(t))
    return hard, frac


def ml_error_mc(code, p, seed, trials, *, workers=1, z=3.0,
                cap=DEFAULT_CODEWORD_CAP, codeword_index=0) -> MLEstimate:
    """Empirical block-error rate of exact ML decoding on a BSC(p).

    Deterministic for fixed (seed, trials) independently of `workers`:
    trials are split into fixed-size blocks with per-block counter-based
    generators, and the error count is an exact integer-plus-fractions
    sum reduced in block order.
    """
    if not 0 <= p < 0.5:
        raise DomainError("p must lie in [0, 1/2)")
    M = code.matroid if isinstance(code, CodeView) else code
    codewords = _codeword_table(M, cap)
    blocks = []
    done = 0
    idx = 0
    while done < trials:
        count = min(MC_BLOCK, trials - done)
        blocks.append((idx, count))
        done += count
        idx += 1
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda b: _mc_block(codewords, codeword_index, p, seed, b[0], b[1]),
                blocks))
    else:
        results = [_mc_block(codewords, codeword_index, p, seed, b, c)
                   for b, c in blocks]
    hard = sum(r[0] for r in results)
    frac = sum((r[1] for r in results), Fraction(0))
    errors = hard + float(frac)
    rate = errors / trials
    lo, hi = wilson_interval(errors, trials, z)
    return MLEstimate(p, trials, seed, errors, rate, lo, hi, z)


def exact_ml_error(code, p, cap=1 << 20) -> float:
    """Exhaustive oracle: sum the exact error contribution of every error
    pattern (the syndrome table route), with the same tie accounting."""
    M = code.matroid if isinstance(code, CodeView) else code
    codewords = _codeword_table(M, cap)
    n = codewords.shape[1]
    if 2 ** n > cap:
        raise CapExceeded("error pattern enumeration exceeds cap")
    patterns = np.arange(2 ** n, dtype=np.uint32)
    bits = ((patterns[:, None] >> np.arange(n)[None, :]) & 1).astype(np.uint8)
    dists = (bits[:, None, :] != codewords[None, :, :]).sum(axis=2)
    dmin = dists.min(axis=1)
    dzero = dists[:, 0]
    weights = bits.sum(axis=1)
    total = 0.0
    for i in range(2 ** n):
        prob = p ** int(weights[i]) * (1 - p) ** (n - int(weights[i]))
        if dzero[i] > dmin[i]:
            total += prob
        else:
            t = int((dists[i] == dmin[i]).sum())
            if t > 1:
                total += prob * (t - 1) / t
    return total
