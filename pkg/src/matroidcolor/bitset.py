"""Helpers for element sets stored as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        if i < 0:
            raise ValueError(f"negative element {i}")
        m |= 1 << i
    return m


def elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def size(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, largest first, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def submasks_ascending(mask: int) -> list[int]:
    """Submasks of ``mask`` in increasing integer order."""
    return sorted(submasks(mask))


def lex_key(mask: int) -> tuple:
    """Sort key: by sorted element tuple (so {0,1} < {0,2} < {1})."""
    return tuple(elements(mask))


def sort_sets(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lex_key)


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, deduplicated and lex sorted."""
    uniq = sorted(set(masks), key=size, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return sort_sets(kept)


def minimal(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated and lex sorted."""
    uniq = sorted(set(masks), key=size)
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return sort_sets(kept)
