"""Exact Gaussian elimination over a field descriptor (``PrimeField`` or ``Rationals``).

Matrices here are payload grids (tuple of row tuples) in the field's canonical
representation.  Everything is exact; no pivoting heuristics are needed.
"""

from __future__ import annotations

from typing import Any, Sequence

from .rings import Ring, UnsupportedRingError

Grid = tuple[tuple[Any, ...], ...]


def _require_field(field: Ring) -> None:
    if not field.is_field:
        raise UnsupportedRingError(f"{field.describe()} is not a field")


def rref(m: Sequence[Sequence[Any]], field: Ring) -> tuple[Grid, Grid, list[int]]:
    """Reduced row-echelon form.

    Returns ``(R, P, pivots)`` with ``P`` invertible, ``P @ m == R``, and
    ``pivots[i]`` the pivot column of row ``i`` of ``R``.
    """
    _require_field(field)
    rows, cols = len(m), len(m[0]) if m else 0
    z, o = field.zero_value(), field.one_value()
    add, mul, neg, inv = field.add_values, field.mul_values, field.neg_values, field.inv_value
    a = [list(r) for r in m]
    p = [[o if i == j else z for j in range(rows)] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != z), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p[r], p[piv] = p[piv], p[r]
        s = inv(a[r][c])
        a[r] = [mul(s, v) for v in a[r]]
        p[r] = [mul(s, v) for v in p[r]]
        for i in range(rows):
            if i != r and a[i][c] != z:
                f = neg(a[i][c])
                a[i] = [add(u, mul(f, v)) for u, v in zip(a[i], a[r])]
                p[i] = [add(u, mul(f, v)) for u, v in zip(p[i], p[r])]
        pivots.append(c)
        r += 1
    return tuple(map(tuple, a)), tuple(map(tuple, p)), pivots


def rank(m: Sequence[Sequence[Any]], field: Ring) -> int:
    return len(rref(m, field)[2])


def one_inverse(m: Sequence[Sequence[Any]], field: Ring) -> Grid:
    """A {1}-inverse ``G`` of a square matrix: ``m @ G @ m == m``.

    With ``P @ m = R`` in reduced echelon form and pivot columns ``c_i``,
    ``G = Q @ P`` where ``Q`` has a single one at ``(c_i, i)`` per pivot.
    """
    _, p, pivots = rref(m, field)
    n = len(m)
    z = field.zero_value()
    g = [[z] * n for _ in range(n)]
    for i, c in enumerate(pivots):
        g[c] = list(p[i])
    return tuple(map(tuple, g))
