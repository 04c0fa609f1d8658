"""Independent brute-force oracles for the test suite.

Nothing here goes through the I-structure table: equality of words is
decided by closing under the degree-2 relations directly, which is the
ground truth the table-based decision procedure must reproduce.
"""

from __future__ import annotations

import itertools


def relations_of_pairmap(r) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The defining relations of the semigroup of a pair map: w = r(w)
    for every non-fixed pair."""
    return [(w, img) for w, img in r.pairs() if img != w]


def closure(relations, w) -> frozenset:
    """All words reachable from w by applying a relation (either way) at
    any position."""
    rules = []
    for lhs, rhs in relations:
        rules.append((lhs, rhs))
        rules.append((rhs, lhs))
    seen = {w}
    todo = [w]
    while todo:
        cur = todo.pop()
        for pos in range(len(cur) - 1):
            pair = cur[pos : pos + 2]
            for src, dst in rules:
                if pair == src:
                    nxt = cur[:pos] + dst + cur[pos + 2 :]
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
    return frozenset(seen)


def class_index(n: int, relations, m: int) -> dict:
    """Map each word of degree m to a canonical label of its class (the
    least member)."""
    label = {}
    for w in itertools.product(range(1, n + 1), repeat=m):
        if w in label:
            continue
        cls = closure(relations, w)
        rep = min(cls)
        for u in cls:
            label[u] = rep
    return label


def words_equal_bf(relations, w1, w2) -> bool:
    if len(w1) != len(w2):
        return False
    return w2 in closure(relations, w1)
