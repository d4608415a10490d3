"""Pure-Python kernels. Reference behaviour for the compiled ``_kernels`` module."""


def det_bareiss(rows):
    """Fraction-free Gaussian elimination with row-swap pivoting.

    ``rows`` is a square list of lists of ints and is not modified.
    """
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_condensation(rows):
    """Dodgson condensation; returns None when an interior divisor vanishes."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    prev = [[1] * (n + 1) for _ in range(n + 1)]
    cur = [list(r) for r in rows]
    size = n
    while size > 1:
        nxt = []
        for i in range(size - 1):
            out = []
            for j in range(size - 1):
                d = prev[i + 1][j + 1]
                if d == 0:
                    return None
                q, r = divmod(cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j], d)
                if r:
                    raise ArithmeticError("inexact condensation step")
                out.append(q)
            nxt.append(out)
        prev, cur = cur, nxt
        size -= 1
    return cur[0][0]


def count_disjoint(families):
    """Count tuples (p_0, ..., p_{k-1}), p_a drawn from ``families[a]``, whose
    vertex bitmasks are pairwise disjoint."""
    k = len(families)
    if k == 0:
        return 1
    last = families[-1]

    def walk(level, used):
        if level == k - 1:
            return sum(1 for m in last if not m & used)
        total = 0
        for m in families[level]:
            if not m & used:
                total += walk(level + 1, used | m)
        return total

    return walk(0, 0)
