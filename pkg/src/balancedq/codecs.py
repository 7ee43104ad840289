"""Fixed-length balancing encoders and decoders.

Five constructions, one per balance notion plus the classic bipolar case:

- knuth: q=2, invert the first z symbols so the word sums to zero.
- pb:    shift by an offset symbol (odd q only) so the nonzero count is
         even, then invert the polarity of the first z symbols.
- cb:    add one of q*k candidate balancing sequences symbol-wise mod 2q.
- cpb:   polarity-balance first, optionally mirror the positive values,
         then add a balancing sequence to one side (mod within that side).
- sb:    q-1 rounds; round v fixes the count of the round's lowest symbol
         at k/q by rotating a split of the sub-alphabet positions.

Every encoder returns the payload plus a side-info record; the prefix is
the side info spelled as a balanced word (see codebook).  Encoders pick
the smallest valid index by default; any valid index may be injected
instead and is verified, so decoders never depend on canonical choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .alphabet import Word, is_cb, is_pb, sub_alphabet, symbols, validate_word
from .codebook import (
    CbSide,
    CpbSide,
    KnuthSide,
    PbSide,
    PrefixPlan,
    SbSide,
    SideInfo,
    decode_prefix,
    encode_prefix,
    plan,
)
from .errors import (
    BalancingInvariantError,
    DecodeError,
    InfeasibleParamsError,
    InvalidIndexError,
)


@dataclass(frozen=True)
class CodecParams:
    """Validated (construction, q, k) triple with its prefix plan."""

    kind: str
    q: int
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", self.kind.lower())
        object.__setattr__(self, "_plan", plan(self.kind, self.q, self.k))

    @property
    def plan(self) -> PrefixPlan:
        return self._plan  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Codeword:
    """A balanced prefix followed by the balanced payload."""

    prefix: Word
    payload: Word

    @property
    def word(self) -> Word:
        return self.prefix + self.payload


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _reduce(value: int, lo: int, modulus: int) -> int:
    # land on the unique alphabet element congruent to value (step-2 grids
    # stay aligned because value - lo is always even here)
    return lo + (value - lo) % modulus


def _reduce_full(value: int, q: int) -> int:
    return _reduce(value, -q + 1, 2 * q)


def balancing_sequence(i: int, length: int, radix: int) -> Word:
    """The i-th balancing sequence of the given length.

    Block j = i // length contributes the value 2j; the first i % length
    positions carry 2j+2 instead.  Valid for 0 <= i < radix * length.
    """
    if length < 1:
        raise InvalidIndexError(f"balancing sequences need length >= 1, got {length}")
    if not 0 <= i < radix * length:
        raise InvalidIndexError(f"sequence index {i} outside 0..{radix * length - 1}")
    j = 2 * (i // length)
    g = i % length
    return (j + 2,) * g + (j,) * (length - g)


# ---------------------------------------------------------------------------
# bipolar (q = 2)


def _apply_knuth(u: Word, z: int) -> Word:
    return tuple(-x for x in u[:z]) + u[z:]


def find_knuth_index(u: Sequence[int]) -> int:
    """Smallest z in [0, k) such that inverting u[:z] gives charge zero."""
    u = tuple(u)
    total = sum(u)
    running = 0
    for z in range(len(u)):
        if total - 2 * running == 0:
            return z
        running += u[z]
    raise BalancingInvariantError("no bipolar balancing point found")


def knuth_encode(
    u: Sequence[int], params: CodecParams, z: Optional[int] = None
) -> Tuple[Codeword, KnuthSide]:
    u = _checked_payload(u, params, "knuth")
    if z is None:
        z = find_knuth_index(u)
    elif not (0 <= z < params.k and sum(_apply_knuth(u, z)) == 0):
        raise InvalidIndexError(f"z={z} does not balance this word")
    side = KnuthSide(z)
    return Codeword(encode_prefix(side, params.plan), _apply_knuth(u, z)), side


def knuth_decode(cw: Codeword, params: CodecParams) -> Word:
    side = _checked_prefix(cw, params, "knuth")
    return _apply_knuth(cw.payload, side.z)


# ---------------------------------------------------------------------------
# polarity balancing


def _apply_pb_flip(u: Word, z: int) -> Word:
    return tuple(-x for x in u[:z]) + u[z:]


def find_pb_offset(u: Sequence[int], q: int) -> int:
    """Smallest symbol a whose count in u has the parity of k (odd q only).

    Subtracting such an a leaves an even number of nonzero symbols, which
    the polarity inversion stage needs.
    """
    u = tuple(u)
    k = len(u)
    for a in symbols(q):
        if sum(1 for x in u if x == a) % 2 == k % 2:
            return a
    raise BalancingInvariantError("no feasible offset symbol found")


def find_pb_index(u: Sequence[int]) -> int:
    """Smallest z in [0, k) such that inverting the first z polarities
    balances the word."""
    u = tuple(u)
    total = sum(_sign(x) for x in u)
    running = 0
    for z in range(len(u)):
        if total - 2 * running == 0:
            return z
        running += _sign(u[z])
    raise BalancingInvariantError("no polarity balancing point found")


def _pb_stage(
    u: Word, q: int, k: int, a: Optional[int], z: Optional[int]
) -> Tuple[Word, Optional[int], int]:
    """Shared offset-and-flip stage; returns (balanced word, a, z)."""
    if q % 2 == 0:
        if a is not None:
            raise InvalidIndexError("offset symbols only apply to odd q")
        shifted = u
    else:
        if a is None:
            a = find_pb_offset(u, q)
        elif a not in symbols(q) or sum(1 for x in u if x == a) % 2 != k % 2:
            raise InvalidIndexError(f"offset a={a} has the wrong count parity")
        shifted = tuple(_reduce_full(x - a, q) for x in u)
    if z is None:
        z = find_pb_index(shifted)
    elif not (0 <= z < k and is_pb(_apply_pb_flip(shifted, z), q)):
        raise InvalidIndexError(f"z={z} does not polarity-balance this word")
    return _apply_pb_flip(shifted, z), a, z


def pb_encode(
    u: Sequence[int],
    params: CodecParams,
    a: Optional[int] = None,
    z: Optional[int] = None,
) -> Tuple[Codeword, PbSide]:
    u = _checked_payload(u, params, "pb")
    balanced, a, z = _pb_stage(u, params.q, params.k, a, z)
    side = PbSide(z, a)
    return Codeword(encode_prefix(side, params.plan), balanced), side


def pb_decode(cw: Codeword, params: CodecParams) -> Word:
    side = _checked_prefix(cw, params, "pb")
    shifted = _apply_pb_flip(cw.payload, side.z)
    if side.a is None:
        return shifted
    return tuple(_reduce_full(x + side.a, params.q) for x in shifted)


# ---------------------------------------------------------------------------
# charge balancing


def _apply_cb(u: Word, z: int, q: int, k: int) -> Word:
    seq = balancing_sequence(z, k, q)
    return tuple(_reduce_full(x + b, q) for x, b in zip(u, seq))


def find_cb_index(u: Sequence[int], q: int) -> int:
    """Smallest z in [0, q*k) whose balancing sequence zeroes the charge."""
    u = tuple(u)
    k = len(u)
    for j in range(q):
        delta = 2 * j
        vals = [_reduce_full(x + delta, q) for x in u]
        s = sum(vals)
        if s == 0:
            return j * k
        for g in range(1, k):
            rep = _reduce_full(u[g - 1] + delta + 2, q)
            s += rep - vals[g - 1]
            if s == 0:
                return j * k + g
    raise BalancingInvariantError("no charge balancing sequence found")


def cb_encode(
    u: Sequence[int], params: CodecParams, z: Optional[int] = None
) -> Tuple[Codeword, CbSide]:
    u = _checked_payload(u, params, "cb")
    if z is None:
        z = find_cb_index(u, params.q)
    elif not (0 <= z < params.q * params.k and is_cb(_apply_cb(u, z, params.q, params.k), params.q)):
        raise InvalidIndexError(f"z={z} does not charge-balance this word")
    side = CbSide(z)
    return Codeword(encode_prefix(side, params.plan), _apply_cb(u, z, params.q, params.k)), side


def cb_decode(cw: Codeword, params: CodecParams) -> Word:
    side = _checked_prefix(cw, params, "cb")
    q, k = params.q, params.k
    seq = balancing_sequence(side.z, k, q)
    return tuple(_reduce_full(x - b, q) for x, b in zip(cw.payload, seq))


# ---------------------------------------------------------------------------
# joint charge and polarity balancing


def _side_bounds(q: int, positive: bool) -> Tuple[int, int]:
    # (lowest element, modulus) of the positive or negative half-alphabet
    h = q // 2
    if positive:
        return (1 if q % 2 == 0 else 2), 2 * h
    return -q + 1, 2 * h


def _mirror_positive(x: int, q: int) -> int:
    return 2 * ((q + 1) // 2) - x


def _check_cpb_flags(
    want_xi: Optional[int], want_nu: Optional[str], xi: int, nu: str
) -> None:
    # xi and nu are derived, not free; injected values must agree
    if want_xi is not None and want_xi != xi:
        raise InvalidIndexError(f"xi={want_xi} does not match the derived flag {xi}")
    if want_nu is not None and want_nu != nu:
        raise InvalidIndexError(f"nu={want_nu!r} does not match the derived side {nu!r}")


def _apply_cpb_w(word: Word, nu: str, w: int, q: int) -> Word:
    positive = nu == "+"
    idx = [i for i, x in enumerate(word) if (x > 0) == positive and x != 0]
    k1 = len(idx)
    if k1 == 0:
        return word
    lo, mod = _side_bounds(q, positive)
    j = 2 * (w // k1)
    g = w % k1
    out = list(word)
    for pos, i in enumerate(idx):
        b = j + 2 if pos < g else j
        out[i] = _reduce(word[i] + b, lo, mod)
    return tuple(out)


def find_cpb_index(word: Sequence[int], nu: str, q: int, target: int) -> int:
    """Smallest w whose balancing sequence drives the nu-side sum to target."""
    word = tuple(word)
    positive = nu == "+"
    vals = [x for x in word if (x > 0) == positive and x != 0]
    k1 = len(vals)
    lo, mod = _side_bounds(q, positive)
    for j_half in range(q // 2):
        delta = 2 * j_half
        cur = [_reduce(x + delta, lo, mod) for x in vals]
        s = sum(cur)
        if s == target:
            return j_half * k1
        for g in range(1, k1):
            rep = _reduce(vals[g - 1] + delta + 2, lo, mod)
            s += rep - cur[g - 1]
            if s == target:
                return j_half * k1 + g
    raise BalancingInvariantError("no side balancing sequence found")


def cpb_encode(
    u: Sequence[int],
    params: CodecParams,
    a: Optional[int] = None,
    z: Optional[int] = None,
    w: Optional[int] = None,
    xi: Optional[int] = None,
    nu: Optional[str] = None,
) -> Tuple[Codeword, CpbSide]:
    u = _checked_payload(u, params, "cpb")
    q = params.q
    want_xi, want_nu = xi, nu
    y, a, z = _pb_stage(u, q, params.k, a, z)
    k1 = sum(1 for x in y if x > 0)
    if k1 == 0:
        if w not in (None, 0):
            raise InvalidIndexError("w must be 0 when the word has no nonzero symbols")
        _check_cpb_flags(want_xi, want_nu, 0, "+")
        side = CpbSide(z, 0, "+", 0, a)
        return Codeword(encode_prefix(side, params.plan), y), side
    pos_sum = sum(x for x in y if x > 0)
    neg_sum = -sum(x for x in y if x < 0)
    pivot = k1 * ((q + 1) // 2)
    xi = 1 if (pos_sum < pivot < neg_sum or neg_sum < pivot < pos_sum) else 0
    if xi:
        y = tuple(_mirror_positive(x, q) if x > 0 else x for x in y)
        pos_sum = sum(x for x in y if x > 0)
    # after the mirror both side sums sit on the same side of the pivot
    nu = "+" if (pos_sum >= neg_sum >= pivot or pos_sum <= neg_sum <= pivot) else "-"
    _check_cpb_flags(want_xi, want_nu, xi, nu)
    target = neg_sum if nu == "+" else -pos_sum
    if w is None:
        w = find_cpb_index(y, nu, q, target)
    else:
        if not 0 <= w < (q // 2) * k1:
            raise InvalidIndexError(f"w={w} outside 0..{(q // 2) * k1 - 1}")
        trial = _apply_cpb_w(y, nu, w, q)
        side_sum = sum(x for x in trial if (x > 0) == (nu == "+") and x != 0)
        if side_sum != target:
            raise InvalidIndexError(f"w={w} does not balance the {nu} side")
    x_word = _apply_cpb_w(y, nu, w, q)
    side = CpbSide(z, xi, nu, w, a)
    return Codeword(encode_prefix(side, params.plan), x_word), side


def cpb_decode(cw: Codeword, params: CodecParams) -> Word:
    side = _checked_prefix(cw, params, "cpb")
    q = params.q
    positive = side.nu == "+"
    word = cw.payload
    idx = [i for i, x in enumerate(word) if (x > 0) == positive and x != 0]
    k1 = len(idx)
    if k1:
        lo, mod = _side_bounds(q, positive)
        j = 2 * (side.w // k1)
        g = side.w % k1
        out = list(word)
        for pos, i in enumerate(idx):
            b = j + 2 if pos < g else j
            out[i] = _reduce(word[i] - b, lo, mod)
        word = tuple(out)
    if side.xi:
        word = tuple(_mirror_positive(x, q) if x > 0 else x for x in word)
    shifted = _apply_pb_flip(word, side.z)
    if side.a is None:
        return shifted
    return tuple(_reduce_full(x + side.a, q) for x in shifted)


# ---------------------------------------------------------------------------
# symbol balancing


def _sb_round_stats(word: Word, q: int, v: int) -> Tuple[int, int]:
    """(least, most) frequent symbols of round v's sub-alphabet; ties take
    the smallest symbol for the minimum and the largest for the maximum."""
    sub = sub_alphabet(q, v)
    counts = {s: 0 for s in sub}
    for x in word:
        if x in counts:
            counts[x] += 1
    m_v = min(sub, key=lambda s: (counts[s], sub.index(s)))
    big = max(sub, key=lambda s: (counts[s], sub.index(s)))
    return m_v, big


def _sb_apply_round(word: Word, q: int, v: int, i_v: int, m_v: int, big_m: int) -> Word:
    sub = sub_alphabet(q, v)
    lowest = sub[0]
    lo, mod = lowest, 2 * len(sub)
    d_low = lowest - m_v
    d_high = lowest - big_m
    out = []
    for i, x in enumerate(word):
        if x in sub:
            out.append(_reduce(x + (d_low if i < i_v else d_high), lo, mod))
        else:
            out.append(x)
    return tuple(out)


def _sb_unapply_round(word: Word, q: int, v: int, i_v: int, m_v: int, big_m: int) -> Word:
    sub = sub_alphabet(q, v)
    lo, mod = sub[0], 2 * len(sub)
    d_low = sub[0] - m_v
    d_high = sub[0] - big_m
    out = []
    for i, x in enumerate(word):
        if x in sub:
            out.append(_reduce(x - (d_low if i < i_v else d_high), lo, mod))
        else:
            out.append(x)
    return tuple(out)


def find_sb_split(word: Sequence[int], q: int, v: int, m: int) -> int:
    """Smallest split i_v in [0, k] that leaves exactly m copies of the
    round's lowest symbol after the rotation."""
    word = tuple(word)
    m_v, big_m = _sb_round_stats(word, q, v)
    sub = set(sub_alphabet(q, v))
    count = sum(1 for x in word if x == big_m)  # i_v = 0: everything rotates by d_high
    if count == m:
        return 0
    for i in range(1, len(word) + 1):
        x = word[i - 1]
        if x in sub:
            if x == m_v:
                count += 1
            if x == big_m:
                count -= 1
        if count == m:
            return i
    raise BalancingInvariantError(f"no feasible split in round {v}")


def sb_encode(
    u: Sequence[int], params: CodecParams, splits: Optional[Sequence[int]] = None
) -> Tuple[Codeword, SbSide]:
    u = _checked_payload(u, params, "sb")
    q, k = params.q, params.k
    m = k // q
    if splits is not None:
        splits = tuple(splits)
        if len(splits) != q - 1:
            raise InvalidIndexError(f"expected {q - 1} splits, got {len(splits)}")
    word = u
    rounds = []
    for v in range(1, q):
        m_v, big_m = _sb_round_stats(word, q, v)
        if splits is None:
            i_v = find_sb_split(word, q, v, m)
        else:
            i_v = splits[v - 1]
            if not 0 <= i_v <= k:
                raise InvalidIndexError(f"round {v}: split {i_v} outside 0..{k}")
        word = _sb_apply_round(word, q, v, i_v, m_v, big_m)
        lowest = sub_alphabet(q, v)[0]
        if sum(1 for x in word if x == lowest) != m:
            raise InvalidIndexError(f"round {v}: split {i_v} does not settle symbol {lowest}")
        rounds.append((i_v, m_v, big_m))
    side = SbSide(tuple(rounds))
    return Codeword(encode_prefix(side, params.plan), word), side


def sb_decode(cw: Codeword, params: CodecParams) -> Word:
    side = _checked_prefix(cw, params, "sb")
    word = cw.payload
    for v in range(params.q - 1, 0, -1):
        i_v, m_v, big_m = side.rounds[v - 1]
        word = _sb_unapply_round(word, params.q, v, i_v, m_v, big_m)
    return word


# ---------------------------------------------------------------------------
# dispatch


def _checked_payload(u: Sequence[int], params: CodecParams, kind: str) -> Word:
    if params.kind != kind:
        raise InfeasibleParamsError(f"params are for {params.kind!r}, not {kind!r}")
    u = validate_word(u, params.q)
    if len(u) != params.k:
        raise InfeasibleParamsError(f"expected a length-{params.k} word, got {len(u)}")
    return u


def _checked_prefix(cw: Codeword, params: CodecParams, kind: str) -> SideInfo:
    if params.kind != kind:
        raise InfeasibleParamsError(f"params are for {params.kind!r}, not {kind!r}")
    try:
        prefix = validate_word(cw.prefix, params.q)
        payload = validate_word(cw.payload, params.q)
    except Exception as exc:
        raise DecodeError(str(exc)) from exc
    if len(payload) != params.k:
        raise DecodeError(f"expected a length-{params.k} payload, got {len(payload)}")
    try:
        return decode_prefix(prefix, params.plan)
    except InvalidIndexError as exc:
        raise DecodeError(str(exc)) from exc


_ENCODERS = {
    "knuth": knuth_encode,
    "pb": pb_encode,
    "cb": cb_encode,
    "cpb": cpb_encode,
    "sb": sb_encode,
}

_DECODERS = {
    "knuth": knuth_decode,
    "pb": pb_decode,
    "cb": cb_decode,
    "cpb": cpb_decode,
    "sb": sb_decode,
}


def encode(
    u: Sequence[int], params: CodecParams, inject: Optional[Dict] = None
) -> Tuple[Codeword, SideInfo]:
    """Encode a data word; inject optionally pins balancing choices.

    Recognized inject keys: 'z' (knuth/pb/cb/cpb), 'a' (pb/cpb, odd q),
    'w', 'xi', 'nu' (cpb; xi and nu are derived and only checked), and
    'i' (sb: sequence of q-1 splits).  Injected values are validated and
    rejected with InvalidIndexError when not balancing.
    """
    inject = dict(inject or {})
    kind = params.kind
    if kind == "knuth":
        kwargs = {"z": inject.pop("z", None)}
    elif kind == "pb":
        kwargs = {"a": inject.pop("a", None), "z": inject.pop("z", None)}
    elif kind == "cb":
        kwargs = {"z": inject.pop("z", None)}
    elif kind == "cpb":
        kwargs = {
            "a": inject.pop("a", None),
            "z": inject.pop("z", None),
            "w": inject.pop("w", None),
            "xi": inject.pop("xi", None),
            "nu": inject.pop("nu", None),
        }
    else:
        kwargs = {"splits": inject.pop("i", None)}
    if inject:
        raise InvalidIndexError(f"unsupported inject keys for {kind}: {sorted(inject)}")
    return _ENCODERS[kind](u, params, **kwargs)


def decode(cw: Codeword, params: CodecParams) -> Word:
    """Decode a codeword back to its data word."""
    return _DECODERS[params.kind](cw, params)
