"""Balanced prefix codebooks: side-info packing and enumerative coding.

Each encoder construction produces a small record of side information (a
balancing index plus, depending on the construction, an offset symbol,
mirror and side flags, or per-round split data).  The record is packed into
a single integer with a fixed mixed-radix layout, and that integer is
spelled as a balanced word of fixed length p via lexicographic enumerative
coding, so the prefix obeys the same balance predicate as the payload.

Rank/unrank order words lexicographically under the natural symbol order
-q+1 < -q+3 < ... < q-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple, Union

from .alphabet import (
    Word,
    is_cb,
    is_cpb,
    is_pb,
    is_sb,
    sub_alphabet,
    symbols,
    validate_word,
)
from .counting import (
    RETAINED_MAX,
    charge_count,
    exact_count,
    joint_count,
    polarity_count,
)
from .errors import CapacityError, InfeasibleParamsError, InvalidIndexError

CONSTRUCTIONS = ("knuth", "pb", "cb", "cpb", "sb")

_PREDICATES = {"sb": is_sb, "cb": is_cb, "pb": is_pb, "cpb": is_cpb}


def balance_kind(construction: str) -> str:
    """Balance predicate guaranteed by a construction's prefix and payload."""
    c = construction.lower()
    if c not in CONSTRUCTIONS:
        raise InfeasibleParamsError(f"unknown construction {construction!r}")
    return "cb" if c == "knuth" else c


@dataclass(frozen=True)
class KnuthSide:
    """Bipolar construction side info: the inversion point z."""

    z: int


@dataclass(frozen=True)
class PbSide:
    """Polarity construction side info: inversion point z and, for odd q,
    the offset symbol a subtracted before balancing."""

    z: int
    a: Union[int, None] = None


@dataclass(frozen=True)
class CbSide:
    """Charge construction side info: index z of the balancing sequence."""

    z: int


@dataclass(frozen=True)
class CpbSide:
    """Joint construction side info.

    z and a come from the polarity stage; xi flags the mirror of the
    positive values; nu names the side ('+' or '-') whose values absorbed
    the balancing sequence number w.
    """

    z: int
    xi: int
    nu: str
    w: int
    a: Union[int, None] = None


@dataclass(frozen=True)
class SbSide:
    """Symbol construction side info: one (i, m, M) triple per round.

    i is the split position in 0..k, m and M are the least and most
    frequent symbols of the round's sub-alphabet.
    """

    rounds: Tuple[Tuple[int, int, int], ...]


SideInfo = Union[KnuthSide, PbSide, CbSide, CpbSide, SbSide]


def _check_construction_params(kind: str, q: int, k: int) -> str:
    kind = kind.lower()
    if kind not in CONSTRUCTIONS:
        raise InfeasibleParamsError(f"unknown construction {kind!r}")
    if q < 2:
        raise InfeasibleParamsError(f"alphabet order must be >= 2, got {q}")
    if kind == "knuth":
        if q != 2:
            raise InfeasibleParamsError("the bipolar construction requires q = 2")
        if k < 2 or k % 2:
            raise InfeasibleParamsError(f"bipolar construction needs even k >= 2, got {k}")
        return kind
    if kind == "cpb" and q <= 3:
        raise InfeasibleParamsError(
            f"joint construction needs q >= 4; for q={q} use the pb or cb construction"
        )
    if kind == "sb":
        if k < q or k % q:
            raise InfeasibleParamsError(
                f"symbol construction needs k a positive multiple of q, got k={k}, q={q}"
            )
        return kind
    if k < 1:
        raise InfeasibleParamsError(f"data length must be >= 1, got {k}")
    if q % 2 == 0 and k % 2:
        raise InfeasibleParamsError(
            f"even alphabets admit no balanced words of odd length, got k={k}"
        )
    if kind == "cpb" and k < 2:
        raise InfeasibleParamsError(f"joint construction needs k >= 2, got {k}")
    return kind


def side_info_space(kind: str, q: int, k: int) -> int:
    """Number of distinct packed side-info values P for a construction."""
    kind = _check_construction_params(kind, q, k)
    if kind == "knuth":
        return k
    if kind == "pb":
        return k if q % 2 == 0 else q * k
    if kind == "cb":
        return q * k
    if kind == "cpb":
        base = k * 2 * 2 * ((q // 2) * (k // 2))
        return base if q % 2 == 0 else q * base
    # sb: (k+1) splits and two sub-alphabet symbols per round
    return (k + 1) ** (q - 1) * math.factorial(q) ** 2


@dataclass(frozen=True)
class PrefixPlan:
    """Fixed prefix layout for one (construction, q, k) triple.

    space is the side-info count P; unbalanced_length is log_q(P), the
    length an unconstrained prefix would need; length is the smallest
    feasible balanced-prefix length p with exact_count(kind, p, q) >= P.
    """

    kind: str
    q: int
    k: int
    space: int
    unbalanced_length: float
    length: int


@lru_cache(maxsize=4096)
def plan(kind: str, q: int, k: int) -> PrefixPlan:
    """Compute the prefix plan for a construction."""
    kind = _check_construction_params(kind, q, k)
    space = side_info_space(kind, q, k)
    bkind = balance_kind(kind)
    if bkind == "sb":
        start = step = q
    elif q % 2 == 0:
        start = step = 2
    else:
        start, step = 1, 1
    p = start
    while exact_count(bkind, p, q) < space:
        p += step
    return PrefixPlan(kind, q, k, space, math.log(space) / math.log(q), p)


def _radices(kind: str, q: int, k: int) -> Tuple[Tuple[str, int], ...]:
    """Mixed-radix field layout, most significant first."""
    if kind == "knuth":
        return (("z", k),)
    if kind == "pb":
        if q % 2 == 0:
            return (("z", k),)
        return (("a", q), ("z", k))
    if kind == "cb":
        return (("z", q * k),)
    if kind == "cpb":
        w_space = (q // 2) * (k // 2)
        fields = [("z", k), ("xi", 2), ("nu", 2), ("w", w_space)]
        if q % 2:
            fields.insert(0, ("a", q))
        return tuple(fields)
    raise InfeasibleParamsError(f"no flat field layout for construction {kind!r}")


def pack(side: SideInfo, kind: str, q: int, k: int) -> int:
    """Pack side info into its mixed-radix integer in [0, P)."""
    kind = _check_construction_params(kind, q, k)
    syms = symbols(q)
    if kind == "sb":
        if not isinstance(side, SbSide) or len(side.rounds) != q - 1:
            raise InvalidIndexError(f"expected {q - 1} symbol-construction rounds")
        value = 0
        for v, (i_v, m_v, big_m_v) in enumerate(side.rounds, start=1):
            sub = sub_alphabet(q, v)
            if not 0 <= i_v <= k:
                raise InvalidIndexError(f"round {v}: split {i_v} outside 0..{k}")
            if m_v not in sub or big_m_v not in sub:
                raise InvalidIndexError(f"round {v}: symbols outside the sub-alphabet")
            value = value * (k + 1) + i_v
            value = value * len(sub) + sub.index(m_v)
            value = value * len(sub) + sub.index(big_m_v)
        return value
    fields = dict(_field_values(side, kind, q))
    value = 0
    for name, radix in _radices(kind, q, k):
        item = fields[name]
        if name == "a":
            if item not in syms:
                raise InvalidIndexError(f"offset symbol {item} is not in the alphabet")
            item = syms.index(item)
        if name == "nu":
            if item not in ("+", "-"):
                raise InvalidIndexError(f"side flag must be '+' or '-', got {item!r}")
            item = 0 if item == "+" else 1
        if not 0 <= item < radix:
            raise InvalidIndexError(f"field {name}={item} outside 0..{radix - 1}")
        value = value * radix + item
    return value


def _field_values(side: SideInfo, kind: str, q: int):
    if kind == "knuth":
        if not isinstance(side, KnuthSide):
            raise InvalidIndexError(f"expected KnuthSide, got {type(side).__name__}")
        return [("z", side.z)]
    if kind == "pb":
        if not isinstance(side, PbSide):
            raise InvalidIndexError(f"expected PbSide, got {type(side).__name__}")
        if (side.a is None) != (q % 2 == 0):
            raise InvalidIndexError("offset symbol is required exactly when q is odd")
        return [("z", side.z)] if q % 2 == 0 else [("a", side.a), ("z", side.z)]
    if kind == "cb":
        if not isinstance(side, CbSide):
            raise InvalidIndexError(f"expected CbSide, got {type(side).__name__}")
        return [("z", side.z)]
    if not isinstance(side, CpbSide):
        raise InvalidIndexError(f"expected CpbSide, got {type(side).__name__}")
    if (side.a is None) != (q % 2 == 0):
        raise InvalidIndexError("offset symbol is required exactly when q is odd")
    out = [("z", side.z), ("xi", side.xi), ("nu", side.nu), ("w", side.w)]
    if q % 2:
        out.insert(0, ("a", side.a))
    return out


def unpack(value: int, kind: str, q: int, k: int) -> SideInfo:
    """Inverse of pack; value must lie in [0, P)."""
    kind = _check_construction_params(kind, q, k)
    space = side_info_space(kind, q, k)
    if not 0 <= value < space:
        raise InvalidIndexError(f"packed side info {value} outside 0..{space - 1}")
    syms = symbols(q)
    if kind == "sb":
        rounds = []
        for v in range(q - 1, 0, -1):
            sub = sub_alphabet(q, v)
            value, big_idx = divmod(value, len(sub))
            value, m_idx = divmod(value, len(sub))
            value, i_v = divmod(value, k + 1)
            rounds.append((i_v, sub[m_idx], sub[big_idx]))
        return SbSide(tuple(reversed(rounds)))
    fields = {}
    for name, radix in reversed(_radices(kind, q, k)):
        value, item = divmod(value, radix)
        fields[name] = item
    if kind == "knuth":
        return KnuthSide(fields["z"])
    if kind == "pb":
        a = None if q % 2 == 0 else syms[fields["a"]]
        return PbSide(fields["z"], a)
    if kind == "cb":
        return CbSide(fields["z"])
    a = None if q % 2 == 0 else syms[fields["a"]]
    return CpbSide(fields["z"], fields["xi"], "+" if fields["nu"] == 0 else "-", fields["w"], a)


def _multinomial(r: int, budgets: Tuple[int, ...]) -> int:
    if any(b < 0 for b in budgets) or sum(budgets) != r:
        return 0
    out = math.factorial(r)
    for b in budgets:
        out //= math.factorial(b)
    return out


def _completions(kind: str, q: int, r: int, state) -> int:
    if kind == "cb":
        return charge_count(r, q, state)
    if kind == "pb":
        return polarity_count(r, q, state)
    if kind == "cpb":
        return joint_count(r, q, state[0], state[1])
    return _multinomial(r, state)


def _initial_state(kind: str, q: int, n: int):
    if kind == "cb":
        return 0
    if kind == "pb":
        return 0
    if kind == "cpb":
        return (0, 0)
    return (n // q,) * q


def _advance(kind: str, q: int, state, s: int):
    sign = (s > 0) - (s < 0)
    if kind == "cb":
        return state - s
    if kind == "pb":
        return state - sign
    if kind == "cpb":
        return (state[0] - s, state[1] - sign)
    idx = (s + q - 1) // 2
    return state[:idx] + (state[idx] - 1,) + state[idx + 1 :]


def _check_rank_capacity(kind: str, n: int) -> None:
    if kind in ("cb", "cpb") and n > RETAINED_MAX:
        raise CapacityError(
            f"enumerative coding of charge-constrained words supports n <= {RETAINED_MAX}"
        )


def rank(word: Sequence[int], kind: str, q: int) -> int:
    """Lexicographic index of word among all kind-balanced words of its length."""
    kind = balance_kind(kind)
    w = validate_word(word, q)
    if not _PREDICATES[kind](w, q):
        raise InvalidIndexError(f"word is not {kind}-balanced, cannot rank")
    n = len(w)
    _check_rank_capacity(kind, n)
    state = _initial_state(kind, q, n)
    index = 0
    for i, x in enumerate(w):
        r = n - i - 1
        for s in symbols(q):
            if s >= x:
                break
            index += _completions(kind, q, r, _advance(kind, q, state, s))
        state = _advance(kind, q, state, x)
    return index


def unrank(index: int, n: int, kind: str, q: int) -> Word:
    """Inverse of rank: the index-th kind-balanced word of length n."""
    kind = balance_kind(kind)
    total = exact_count(kind, n, q)
    if not 0 <= index < total:
        raise InvalidIndexError(
            f"index {index} outside 0..{total - 1} for {kind}-balanced words of length {n}"
        )
    _check_rank_capacity(kind, n)
    state = _initial_state(kind, q, n)
    out = []
    for i in range(n):
        r = n - i - 1
        for s in symbols(q):
            nxt = _advance(kind, q, state, s)
            c = _completions(kind, q, r, nxt)
            if index < c:
                out.append(s)
                state = nxt
                break
            index -= c
        else:  # pragma: no cover - unreachable once index < total
            raise InvalidIndexError("exhausted symbols while unranking")
    return tuple(out)


def encode_prefix(side: SideInfo, prefix_plan: PrefixPlan) -> Word:
    """Spell side info as a balanced word of the planned prefix length."""
    value = pack(side, prefix_plan.kind, prefix_plan.q, prefix_plan.k)
    return unrank(value, prefix_plan.length, balance_kind(prefix_plan.kind), prefix_plan.q)


def decode_prefix(word: Sequence[int], prefix_plan: PrefixPlan) -> SideInfo:
    """Recover side info from a received prefix word."""
    w = tuple(word)
    if len(w) != prefix_plan.length:
        raise InvalidIndexError(
            f"prefix length {len(w)} does not match plan length {prefix_plan.length}"
        )
    value = rank(w, balance_kind(prefix_plan.kind), prefix_plan.q)
    return unpack(value, prefix_plan.kind, prefix_plan.q, prefix_plan.k)
