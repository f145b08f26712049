"""Exact maximum-weight assignment for dense integer matrices.

Kuhn-Munkres with row/column potentials and shortest augmenting paths,
kept in pure Python so weights can be arbitrary-precision integers. The
analyzer packs lexicographic preference levels into single big integers,
which overflow float64 solvers; exact arithmetic keeps every comparison
sharp, so the solver returns the same assignment the brute-force search
would pick.
"""

from __future__ import annotations

from typing import Sequence


def max_weight_assignment(weights: Sequence[Sequence[int]]) -> list[int]:
    """Assign each row a distinct column maximising the total weight.

    `weights` is an n x m matrix with n <= m; every row gets assigned.
    Returns the chosen column index per row.
    """
    n = len(weights)
    if n == 0:
        return []
    m = len(weights[0])
    if any(len(row) != m for row in weights):
        raise ValueError("weight matrix rows differ in length")
    if n > m:
        raise ValueError("more rows than columns; pad with dummy columns")

    # Minimisation form; potentials keep reduced costs non-negative.
    cost = [[-w for w in row] for row in weights]
    inf = sum(abs(c) for row in cost for c in row) * 4 + 1

    u = [0] * (n + 1)
    v = [0] * (m + 1)
    match = [0] * (m + 1)  # match[j] = row assigned to column j (1-based)
    way = [0] * (m + 1)

    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [inf] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = inf
            j1 = 0
            for j in range(1, m + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    result = [-1] * n
    for j in range(1, m + 1):
        if match[j] != 0:
            result[match[j] - 1] = j - 1
    return result
