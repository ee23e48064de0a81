"""Coding of finite sequences of naturals by naturals.

The code of a sequence is a fold of the Cantor pairing ``p(a, b) =
(a+b)(a+b+1)/2 + b``::

    encode(())   = 1
    encode(u)    = 2 + p(len(u) - 1, c)   with c = u0, then c <- p(c, u_k)

Every natural >= 1 is the code of exactly one sequence; 0 is not a code.
``pair_ext`` is the shifted pairing on {-1, 0, 1, ...} used by tree products,
with ``pair_ext(-1, -1) == -1``.
"""
from __future__ import annotations

from typing import Callable, Sequence

from . import _kernels
from .errors import NotASequenceCode, OmegaTreesError, OracleError

FinSeq = tuple  # finite sequence of naturals, always stored as a tuple
Oracle = Callable[[int], int]

pair = _kernels.pair
unpair = _kernels.unpair


def encode(u: Sequence[int]) -> int:
    return _kernels.encode(tuple(u))


def decode(s: int) -> tuple:
    if s < 1:
        raise NotASequenceCode(f"{s} is not a sequence code")
    return _kernels.decode(s)


def is_code(s: int) -> bool:
    return s >= 1


def pair_ext(a: int, b: int) -> int:
    """Bijection (N u {-1})^2 -> N u {-1}; only (-1, -1) maps to -1."""
    if a < -1 or b < -1:
        raise ValueError("pair_ext arguments must be >= -1")
    return pair(a + 1, b + 1) - 1


def unpair_ext(z: int) -> tuple[int, int]:
    if z < -1:
        raise ValueError("unpair_ext argument must be >= -1")
    a, b = unpair(z + 1)
    return a - 1, b - 1


def zip_pad(u: Sequence[int], v: Sequence[int]) -> tuple:
    """Pad the shorter sequence with -1 and pair position-wise."""
    n = max(len(u), len(v))
    return tuple(
        pair_ext(u[i] if i < len(u) else -1, v[i] if i < len(v) else -1)
        for i in range(n)
    )


def unzip_pad(w: Sequence[int]) -> tuple[tuple, tuple] | None:
    """Inverse of :func:`zip_pad`.

    Returns None when ``w`` is not in the image, i.e. when one side has a -1
    followed by a natural.
    """
    us, vs = [], []
    u_open = v_open = True
    for z in w:
        if z < 0:
            return None
        a, b = unpair_ext(z)
        if a >= 0:
            if not u_open:
                return None
            us.append(a)
        else:
            u_open = False
        if b >= 0:
            if not v_open:
                return None
            vs.append(b)
        else:
            v_open = False
    return tuple(us), tuple(vs)


def call_oracle(alpha: Oracle, n: int) -> int:
    try:
        value = alpha(n)
    except OmegaTreesError:
        raise
    except Exception as exc:  # noqa: BLE001 - oracle failures are reported uniformly
        raise OracleError(f"branch oracle failed at index {n}: {exc}") from exc
    if not isinstance(value, int):
        raise OracleError(f"branch oracle returned non-integer {value!r} at index {n}")
    return value


def prefix(alpha: Oracle, n: int) -> tuple:
    return tuple(call_oracle(alpha, i) for i in range(n))


def prefix_code(alpha: Oracle, n: int) -> int:
    """Code of the length-``n`` prefix of the branch ``alpha``."""
    return encode(prefix(alpha, n))


def diag_section(alpha: Oracle, i: int, n: int) -> int:
    """The ``i``-th section of ``alpha`` at ``n``: ``alpha(<i, n>)``."""
    return call_oracle(alpha, encode((i, n)))


def is_prefix(u: Sequence[int], v: Sequence[int]) -> bool:
    return _kernels.is_prefix(tuple(u), tuple(v))


def is_proper_prefix(u: Sequence[int], v: Sequence[int]) -> bool:
    return len(u) < len(v) and _kernels.is_prefix(tuple(u), tuple(v))


def incompatible(u: Sequence[int], v: Sequence[int]) -> bool:
    return _kernels.incompatible(tuple(u), tuple(v))


def compatible(u: Sequence[int], v: Sequence[int]) -> bool:
    return not _kernels.incompatible(tuple(u), tuple(v))


def parse_seq(text: str) -> tuple:
    """Parse ``"2,1"`` (or ``""`` for the empty sequence) into a tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        items = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed sequence {text!r}") from exc
    if any(x < 0 for x in items):
        raise ValueError(f"sequence entries must be naturals: {text!r}")
    return items
