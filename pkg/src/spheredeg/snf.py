"""Smith normal form of sparse integer matrices, invariant factors only.

Rows are dicts ``{column: value}`` of Python ints, so there is no overflow.
The pivot is always an entry of least absolute value. Once the pivot's column
is cleared by row operations, its row can be cleared by column operations
that touch nothing else. A leftover entry not divisible by the pivot is folded
into the pivot row, which restores the divisibility chain.
"""
from __future__ import annotations


def _min_entry(rows):
    best = None
    for r, row in rows.items():
        for c, v in row.items():
            a = abs(v)
            if best is None or a < best[0] or (a == best[0] and (r, c) < best[1:]):
                best = (a, r, c)
                if a == 1:
                    return best
    return best


def _add_row(rows, cols, dst, src, q):
    """row[dst] += q * row[src]"""
    rd = rows[dst]
    for c, v in rows[src].items():
        nv = rd.get(c, 0) + q * v
        if nv:
            if c not in rd:
                cols.setdefault(c, set()).add(dst)
            rd[c] = nv
        elif c in rd:
            del rd[c]
            cols[c].discard(dst)


def invariant_factors(matrix) -> list[int]:
    """Nonzero diagonal entries ``d1 | d2 | ...`` of the Smith normal form.

    ``matrix`` is a dense list of lists or a dict ``{row: {col: value}}``.
    The length of the result is the rank.
    """
    if isinstance(matrix, dict):
        rows = {r: {c: int(v) for c, v in row.items() if v} for r, row in matrix.items()}
    else:
        rows = {r: {c: int(v) for c, v in enumerate(row) if v} for r, row in enumerate(matrix)}
    rows = {r: row for r, row in rows.items() if row}
    cols: dict = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    out: list[int] = []
    while rows:
        _, pr, pc = _min_entry(rows)
        while True:
            p = rows[pr][pc]
            # clear the pivot column
            smaller = None
            for r in sorted(cols.get(pc, ())):
                if r == pr:
                    continue
                q = rows[r][pc] // p
                _add_row(rows, cols, r, pr, -q)
                rem = rows[r].get(pc, 0)
                if rem and (smaller is None or abs(rem) < abs(rows[smaller[0]][smaller[1]])):
                    smaller = (r, pc)
            if smaller is not None:
                pr, pc = smaller
                continue
            # clear the pivot row (column ops only touch this row now)
            row = rows[pr]
            for c in sorted(row):
                if c == pc:
                    continue
                rem = row[c] - (row[c] // p) * p
                if rem:
                    row[c] = rem
                    if smaller is None or abs(rem) < abs(row[smaller[1]]):
                        smaller = (pr, c)
                else:
                    del row[c]
                    cols[c].discard(pr)
            if smaller is not None:
                pr, pc = smaller
                continue
            # divisibility of the remaining block
            bad = None
            for r, other in rows.items():
                if r == pr:
                    continue
                if any(v % p for v in other.values()):
                    bad = r
                    break
            if bad is not None:
                _add_row(rows, cols, pr, bad, 1)
                continue
            break
        out.append(abs(rows[pr][pc]))
        del rows[pr]
        cols[pc].discard(pr)
        rows = {r: row for r, row in rows.items() if row}
    out.sort()
    return out


def rank(matrix) -> int:
    return len(invariant_factors(matrix))
