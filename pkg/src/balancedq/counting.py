"""Exact counting of balanced words and exact minimum redundancy.

All counts are exact Python integers.  Charge-constrained counts come from
integer dynamic programming over the distribution of the running symbol sum;
symbol- and polarity-balanced counts use closed multinomial forms.

Caching notes: distribution tables are grown under a lock and shared, so the
functions here are safe to call from several threads; repeated fills are
idempotent.  Tables for lengths up to RETAINED_MAX are kept resident (they
also serve the enumerative prefix coder).  Longer joint censuses are built
on the fly up to CENSUS_MAX_LENGTH, beyond which a CapacityError is raised;
both time and memory grow steeply past a few hundred positions.
"""

from __future__ import annotations

import itertools
import math
import threading
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .alphabet import is_cb, is_pb, is_sb, symbols
from .errors import CapacityError, InfeasibleParamsError

KINDS = ("sb", "cb", "pb", "cpb")

#: Lengths up to this bound keep their distribution tables resident.
RETAINED_MAX = 160

#: Hard bound on joint census length.
CENSUS_MAX_LENGTH = 512

#: Default enumeration budget for the brute-force oracle.
BRUTE_FORCE_BUDGET = 10_000_000

_lock = threading.Lock()

# charge tables: q -> [table_0, table_1, ...]; table_r[j] counts words of
# length r whose symbol sum is 2*j - r*(q-1).
_charge_tables: Dict[int, List[Tuple[int, ...]]] = {}
# largest non-retained charge table seen per q, for cheap ascending sweeps
_charge_snapshot: Dict[int, Tuple[int, Tuple[int, ...]]] = {}

# joint tables: q -> [rows_0, rows_1, ...]; rows_r[j1][j2] counts words of
# length r with symbol sum 2*j1 - r*(q-1) and polarity sum j2 - r.
_joint_tables: Dict[int, List[Tuple[Tuple[int, ...], ...]]] = {}

# running sum-of-squares series for the positive half-alphabet, per h
_halfsum_series: Dict[int, Tuple[List[Tuple[int, ...]], List[int]]] = {}


def _check_nq(n: int, q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise InfeasibleParamsError(f"alphabet order must be an integer >= 2, got {q!r}")
    if not isinstance(n, int) or n < 0:
        raise InfeasibleParamsError(f"length must be a non-negative integer, got {n!r}")


def _charge_step(prev: Tuple[int, ...], q: int) -> Tuple[int, ...]:
    new = [0] * (len(prev) + q - 1)
    for j, v in enumerate(prev):
        for t in range(q):
            new[j + t] += v
    return tuple(new)


def _charge_table(n: int, q: int) -> Tuple[int, ...]:
    """Distribution of the symbol sum over all q**n words of length n."""
    if n <= RETAINED_MAX:
        with _lock:
            tabs = _charge_tables.setdefault(q, [(1,)])
            while len(tabs) <= n:
                tabs.append(_charge_step(tabs[-1], q))
            return tabs[n]
    retained = _charge_table(RETAINED_MAX, q)
    with _lock:
        base_n, base = _charge_snapshot.get(q, (-1, ()))
        if base_n < RETAINED_MAX or base_n > n:
            base_n, base = RETAINED_MAX, retained
        while base_n < n:
            base = _charge_step(base, q)
            base_n += 1
        _charge_snapshot[q] = (base_n, base)
        return base


def charge_count(n: int, q: int, charge: int = 0) -> int:
    """Exact number of length-n words whose symbols sum to charge."""
    _check_nq(n, q)
    span = n * (q - 1)
    if abs(charge) > span or (charge + span) % 2:
        return 0
    return _charge_table(n, q)[(charge + span) // 2]


@lru_cache(maxsize=1 << 16)
def polarity_count(n: int, q: int, polarity: int = 0) -> int:
    """Exact number of length-n words with the given polarity sum.

    The polarity sum is (number of positive) - (number of negative)
    symbols.  Closed form: sum over the number of positive positions of a
    trinomial times a power of the half-alphabet size.
    """
    _check_nq(n, q)
    if abs(polarity) > n:
        return 0
    h = q // 2
    has_zero = q % 2
    total = 0
    for jp in range(max(polarity, 0), (n + polarity) // 2 + 1):
        jm = jp - polarity
        z = n - jp - jm
        if not has_zero and z != 0:
            continue
        total += (
            math.factorial(n)
            // (math.factorial(jp) * math.factorial(jm) * math.factorial(z))
            * h ** (jp + jm)
        )
    return total


def _joint_step(prev, q):
    r = (len(prev) - 1) // (q - 1) + 1  # new length
    new = [[0] * (2 * r + 1) for _ in range(r * (q - 1) + 1)]
    for s in symbols(q):
        t = (s + q - 1) // 2
        dj2 = ((s > 0) - (s < 0)) + 1
        for j1, row in enumerate(prev):
            tgt = new[j1 + t]
            for j2, v in enumerate(row):
                if v:
                    tgt[j2 + dj2] += v
    return tuple(tuple(row) for row in new)


def _joint_rows(n: int, q: int):
    if n > CENSUS_MAX_LENGTH:
        raise CapacityError(
            f"joint census supported up to n={CENSUS_MAX_LENGTH}, got {n}"
        )
    if n <= RETAINED_MAX:
        with _lock:
            tabs = _joint_tables.setdefault(q, [((1,),)])
            while len(tabs) <= n:
                tabs.append(_joint_step(tabs[-1], q))
            return tabs[n]
    return _joint_rows_large(n, q)


@lru_cache(maxsize=2)
def _joint_rows_large(n: int, q: int):
    rows = _joint_rows(RETAINED_MAX, q)
    for _ in range(RETAINED_MAX, n):
        rows = _joint_step(rows, q)
    return rows


class JointCensus:
    """Exact joint distribution of (charge sum, polarity sum) at length n.

    cell(s1, s2) is the number of words of length n whose symbols sum to s1
    and whose polarity sum is s2.  The table is symmetric under joint
    negation and its total mass is q**n.
    """

    __slots__ = ("n", "q", "_rows")

    def __init__(self, n: int, q: int, rows) -> None:
        self.n = n
        self.q = q
        self._rows = rows

    def cell(self, charge: int = 0, polarity: int = 0) -> int:
        span = self.n * (self.q - 1)
        if abs(charge) > span or (charge + span) % 2 or abs(polarity) > self.n:
            return 0
        return self._rows[(charge + span) // 2][polarity + self.n]

    def total(self) -> int:
        return sum(map(sum, self._rows))

    def charge_marginal(self, charge: int) -> int:
        span = self.n * (self.q - 1)
        if abs(charge) > span or (charge + span) % 2:
            return 0
        return sum(self._rows[(charge + span) // 2])

    def polarity_marginal(self, polarity: int) -> int:
        if abs(polarity) > self.n:
            return 0
        j2 = polarity + self.n
        return sum(row[j2] for row in self._rows)

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        span = self.n * (self.q - 1)
        for j1, row in enumerate(self._rows):
            for j2, v in enumerate(row):
                if v:
                    yield (2 * j1 - span, j2 - self.n), v

    def __repr__(self) -> str:  # pragma: no cover
        return f"JointCensus(n={self.n}, q={self.q})"


def joint_census(n: int, q: int) -> JointCensus:
    """Build the exact joint (charge, polarity) census for length n."""
    _check_nq(n, q)
    return JointCensus(n, q, _joint_rows(n, q))


def joint_count(n: int, q: int, charge: int = 0, polarity: int = 0) -> int:
    """Exact number of length-n words with the given charge and polarity sums."""
    _check_nq(n, q)
    span = n * (q - 1)
    if abs(charge) > span or (charge + span) % 2 or abs(polarity) > n:
        return 0
    return _joint_rows(n, q)[(charge + span) // 2][polarity + n]


def count_sb(n: int, q: int) -> int:
    """Symbol-balanced words: n! / ((n/q)!)**q, zero unless q divides n."""
    _check_nq(n, q)
    if n % q:
        return 0
    m = n // q
    return math.factorial(n) // math.factorial(m) ** q


def count_cb(n: int, q: int) -> int:
    """Charge-balanced words: central coefficient of the sum distribution."""
    return charge_count(n, q, 0)


def count_pb(n: int, q: int) -> int:
    """Polarity-balanced words (equal positive and negative counts)."""
    return polarity_count(n, q, 0)


def _halfsum_squares(h: int, j: int) -> int:
    """Sum over t of N_j(t)**2 where N_j is the sum distribution of j
    symbols drawn from a size-h half-alphabet.

    This equals the number of pairs of length-j positive words with equal
    sums, which is exactly the number of ways to fill the positive and the
    mirrored negative positions of a charge-balanced pattern.
    """
    with _lock:
        dist, series = _halfsum_series.setdefault(h, ([(1,)], [1]))
        while len(series) <= j:
            nxt = _charge_step(dist[-1], h)
            dist.append(nxt)
            series.append(sum(v * v for v in nxt))
        return series[j]


def count_cpb(n: int, q: int) -> int:
    """Words that are charge- and polarity-balanced at once.

    For q <= 3 charge balance already forces polarity balance.  For q = 4
    the count collapses to a squared central binomial.  Otherwise the count
    is assembled from the polarity pattern (which positions are positive,
    negative, zero) times the number of value assignments with opposite
    half-sums; this agrees with cell (0, 0) of the joint census.
    """
    _check_nq(n, q)
    if q <= 3:
        return count_cb(n, q)
    if q == 4:
        return 0 if n % 2 else math.comb(n, n // 2) ** 2
    h = q // 2
    if q % 2 == 0:
        if n % 2:
            return 0
        j = n // 2
        return math.comb(n, j) * _halfsum_squares(h, j)
    total = 0
    for j in range(n // 2 + 1):
        patterns = math.comb(n, 2 * j) * math.comb(2 * j, j)
        total += patterns * _halfsum_squares(h, j)
    return total


_COUNTERS = {"sb": count_sb, "cb": count_cb, "pb": count_pb, "cpb": count_cpb}


def exact_count(kind: str, n: int, q: int) -> int:
    """Dispatch to the exact counter for kind in {'sb','cb','pb','cpb'}."""
    try:
        fn = _COUNTERS[kind.lower()]
    except KeyError:
        raise InfeasibleParamsError(f"unknown balance kind {kind!r}") from None
    return fn(n, q)


def exact_redundancy(kind: str, n: int, q: int) -> float:
    """Minimum redundancy n - log_q(count) of the best fixed-length code.

    Raises InfeasibleParamsError when no balanced word of length n exists.
    math.log takes exact big integers (internally splitting mantissa and
    exponent), so the result carries ordinary double precision.
    """
    m = exact_count(kind, n, q)
    if m == 0:
        raise InfeasibleParamsError(
            f"no {kind}-balanced words of length {n} over the order-{q} alphabet"
        )
    return n - math.log(m) / math.log(q)


@lru_cache(maxsize=256)
def _brute_tally(n: int, q: int) -> Tuple[int, int, int, int]:
    sb = cb = pb = cpb = 0
    for w in itertools.product(symbols(q), repeat=n):
        c = is_cb(w, q)
        p = is_pb(w, q)
        cb += c
        pb += p
        cpb += c and p
        sb += is_sb(w, q)
    return sb, cb, pb, cpb


def brute_force_count(kind: str, n: int, q: int, budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Oracle counter: enumerate all q**n words and apply the predicate.

    Refuses to enumerate more than budget words.  Exists to cross-check the
    closed forms and dynamic programs, not for production use.
    """
    _check_nq(n, q)
    if kind.lower() not in KINDS:
        raise InfeasibleParamsError(f"unknown balance kind {kind!r}")
    if q**n > budget:
        raise CapacityError(f"enumeration of {q}**{n} words exceeds budget {budget}")
    tally = _brute_tally(n, q)
    return tally[KINDS.index(kind.lower())]
