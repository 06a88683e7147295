"""Exact binomial coefficients and lazy enumeration of integer compositions."""

from __future__ import annotations

import math
from collections.abc import Iterator

# Upper indices above this are computed on demand and not cached.
MEMO_LIMIT = 512

_memo: dict[tuple[int, int], int] = {}


def binomial(n: int, r: int) -> int:
    """Return C(n, r) as an exact integer, with C(n, r) = 0 whenever n < r."""
    if n < 0 or r < 0:
        raise ValueError(f"binomial indices must be non-negative, got ({n}, {r})")
    if r > n:
        return 0
    if n > MEMO_LIMIT:
        return math.comb(n, r)
    key = (n, r)
    value = _memo.get(key)
    if value is None:
        # dict assignment is atomic under the GIL; a racing duplicate write stores the same value
        value = _memo[key] = math.comb(n, r)
    return value


def binomial_table(r: int, upto: int) -> list[int]:
    """C(x, r) for x = 0..upto, for use in tight loops."""
    return [binomial(x, r) for x in range(upto + 1)]


def count_compositions(total: int, parts: int) -> int:
    """Number of weak compositions of ``total`` into ``parts`` parts."""
    if parts == 0:
        return 1 if total == 0 else 0
    return math.comb(total + parts - 1, parts - 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of ``parts`` non-negative integers summing to ``total``.

    Tuples come out in lexicographic order, each exactly once:

    >>> list(compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be non-negative")
    if parts == 0:
        if total > 0:
            raise ValueError(f"cannot split {total} into zero parts")
        yield ()
        return
    yield from _compositions(total, parts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def balanced_parts(total: int, parts: int) -> tuple[int, ...]:
    """Split ``total`` into ``parts`` integers differing by at most one, larger parts first."""
    q, extra = divmod(total, parts)
    return tuple(q + 1 if i < extra else q for i in range(parts))
