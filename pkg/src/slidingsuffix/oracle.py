"""Brute-force reference implementations used for differential testing.

Everything here is pure, slow, and independent of the incremental tree:
results are computed directly from the window text by exhaustive scanning.
"""

from __future__ import annotations

from typing import NamedTuple


class TreeSketch(NamedTuple):
    """Canonical, representation-independent description of a suffix tree.

    `internal_strings` lists the full root-to-node string of every internal
    node (the root contributes the empty string); `leaf_starts` lists the
    1-based start of each suffix represented by a leaf.  Both are sorted,
    so sketches compare with plain equality.
    """

    internal_strings: tuple
    leaf_starts: tuple


def naive_lrs(w) -> int:
    """Length of the longest suffix of w occurring at least twice in w."""
    n = len(w)
    for length in range(n - 1, 0, -1):
        suffix = w[n - length:]
        hits = 0
        for i in range(n - length + 1):
            if w[i:i + length] == suffix:
                hits += 1
                if hits >= 2:
                    return length
    return 0


def _extension_sets(w) -> dict:
    """Map each substring (including the empty one) to its set of following symbols."""
    ext: dict = {}
    n = len(w)
    for i in range(n):
        for j in range(i, n):
            key = w[i:j]
            s = ext.get(key)
            if s is None:
                ext[key] = {w[j]}
            else:
                s.add(w[j])
    return ext


def naive_suffix_tree(w) -> TreeSketch:
    """Sketch of the implicit suffix tree of w by direct enumeration.

    Internal nodes are exactly the root plus the substrings followed by two
    or more distinct symbols; leaves are the suffixes occurring exactly
    once, i.e. those longer than the longest repeating suffix.
    """
    empty = w[:0]
    if len(w) == 0:
        return TreeSketch((empty,), ())
    ext = _extension_sets(w)
    internal = [s for s, nxt in ext.items() if len(nxt) >= 2]
    if empty not in internal:
        internal.append(empty)
    leaves = tuple(range(1, len(w) - naive_lrs(w) + 1))
    return TreeSketch(tuple(sorted(internal)), leaves)


def naive_occurrences(w, p) -> list:
    """Sorted 1-based start positions of every occurrence of p in w."""
    out = []
    if len(p) == 0 or len(p) > len(w):
        return out
    if isinstance(w, (bytes, bytearray)):
        text = bytes(w)
        i = text.find(p)
        while i != -1:
            out.append(i + 1)
            i = text.find(p, i + 1)
        return out
    for i in range(len(w) - len(p) + 1):
        if w[i:i + len(p)] == p:
            out.append(i + 1)
    return out
