"""Independent reference computations used only by the tests."""

import itertools
from math import prod


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        total += (-1) ** inversions * prod(m[r][perm[r]] for r in range(n))
    return total


def binomial_multiplicative(n, k):
    num = den = 1
    for t in range(1, k + 1):
        num *= n - k + t
        den *= t
    return num // den


def pascal_by_recurrence(rows, cols):
    g = [[1] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            g[i][j] = g[i - 1][j] + g[i][j - 1]
    return g


def lattice_paths(start, end):
    """Recursive enumeration of east/north paths as vertex lists."""
    if start == end:
        return [[start]]
    out = []
    x, y = start
    if x < end[0]:
        out += [[start] + p for p in lattice_paths((x + 1, y), end)]
    if y < end[1]:
        out += [[start] + p for p in lattice_paths((x, y + 1), end)]
    return out


def disjoint_families_bruteforce(k, i, j):
    """Count families over the full product, checking every pair of paths."""
    per = [lattice_paths((-(i + a), 0), (0, j + a)) for a in range(k)]
    count = 0
    for fam in itertools.product(*per):
        sets = [set(p) for p in fam]
        if all(not (sets[a] & sets[b]) for a in range(k) for b in range(a + 1, k)):
            count += 1
    return count
