# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernels; mirrors `_purepy` item for item.

Length validation happens in the callers, not here.
"""

from cpython cimport array

import array

OPEN = 0

cdef array.array _LONG = array.array('l', [])


cdef inline tuple _as_tuple(object o):
    return <tuple>o if type(o) is tuple else tuple(o)


cdef long _black(tuple a, tuple b) except -1:
    cdef Py_ssize_t i, n = len(a)
    cdef long count = 0
    for i in range(n):
        if <long>a[i] == <long>b[i]:
            count += 1
    return count


def black_count(a, b):
    """Number of positions where the two codes agree."""
    return _black(_as_tuple(a), _as_tuple(b))


def partial_match_count(code, partial):
    """Number of positions where `code` agrees with a non-open entry of `partial`."""
    cdef tuple tc = _as_tuple(code)
    cdef tuple tp = _as_tuple(partial)
    cdef Py_ssize_t i, n = len(tc)
    cdef long count = 0, p
    for i in range(n):
        p = <long>tp[i]
        if p != 0 and <long>tc[i] == p:
            count += 1
    return count


def min_black_filter(members, guess):
    """Smallest black count any member scores against `guess`, plus the members
    that score exactly that.  Raises on an empty member list."""
    cdef list pool = members if type(members) is list else list(members)
    cdef Py_ssize_t size = len(pool)
    if size == 0:
        raise ValueError("empty member list")
    cdef tuple tg = _as_tuple(guess)
    cdef array.array blacks = array.clone(_LONG, size, zero=False)
    cdef long* data = blacks.data.as_longs
    cdef Py_ssize_t i
    cdef long best = -1, b
    for i in range(size):
        b = _black(_as_tuple(pool[i]), tg)
        data[i] = b
        if best < 0 or b < best:
            best = b
    cdef list survivors = []
    for i in range(size):
        if data[i] == best:
            survivors.append(pool[i])
    return best, survivors


def partition_by_black(members, guess):
    """Group members by their black count against `guess`."""
    cdef tuple tg = _as_tuple(guess)
    cdef dict parts = {}
    cdef object key
    cdef long b
    for m in members:
        b = _black(_as_tuple(m), tg)
        key = b
        if key in parts:
            (<list>parts[key]).append(m)
        else:
            parts[key] = [m]
    return parts
