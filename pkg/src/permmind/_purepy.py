"""Pure-Python counting kernels.

Mirrors the compiled module in `_speedups.pyx`; callers go through
`permmind._kernel` which picks whichever backend is available.  Length
validation happens in the callers, not here.
"""

OPEN = 0


def black_count(a, b):
    """Number of positions where the two codes agree."""
    count = 0
    for x, y in zip(a, b):
        if x == y:
            count += 1
    return count


def partial_match_count(code, partial):
    """Number of positions where `code` agrees with a non-open entry of `partial`."""
    count = 0
    for x, p in zip(code, partial):
        if p != OPEN and x == p:
            count += 1
    return count


def min_black_filter(members, guess):
    """Smallest black count any member scores against `guess`, plus the members
    that score exactly that.  Raises on an empty member list."""
    if not members:
        raise ValueError("empty member list")
    counts = [black_count(m, guess) for m in members]
    best = min(counts)
    survivors = [m for m, c in zip(members, counts) if c == best]
    return best, survivors


def partition_by_black(members, guess):
    """Group members by their black count against `guess`."""
    parts = {}
    for m in members:
        parts.setdefault(black_count(m, guess), []).append(m)
    return parts
