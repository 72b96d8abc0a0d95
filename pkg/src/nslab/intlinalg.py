"""Exact rank computations over the integers and prime fields.

No floating point anywhere.  Characteristic 0 ranks are computed over the
integers: sparse elimination with unit pivots (which is fraction-free for
free), falling back to dense Bareiss fraction-free elimination on whatever
residual block has no unit entries left.
"""

from __future__ import annotations

__all__ = ["rank_gf2", "rank_mod_p", "rank_exact"]


def rank_gf2(columns: list[int]) -> int:
    """Rank over GF(2); each column is a bitmask of row indices."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            top = col.bit_length() - 1
            row = pivots.get(top)
            if row is None:
                pivots[top] = col
                rank += 1
                break
            col ^= row
    return rank


def rank_mod_p(columns: list[dict[int, int]], p: int) -> int:
    """Rank over GF(p) by sparse elimination (columns are {row: value} dicts)."""
    if p == 2:
        return rank_gf2([_to_bits(c) for c in columns])
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            top = max(col)
            piv = pivots.get(top)
            if piv is None:
                inv = pow(col[top], p - 2, p)
                pivots[top] = {r: (v * inv) % p for r, v in col.items()}
                rank += 1
                break
            factor = col[top]
            for r, v in piv.items():
                w = (col.get(r, 0) - factor * v) % p
                if w:
                    col[r] = w
                else:
                    col.pop(r, None)
    return rank


def _to_bits(col: dict[int, int]) -> int:
    mask = 0
    for r, v in col.items():
        if v & 1:
            mask |= 1 << r
    return mask


def rank_exact(columns: list[dict[int, int]], nrows: int | None = None) -> int:
    """Rank over the rationals, exactly.

    Strategy: certify full rank with a cheap GF(2) elimination when possible
    (a nonzero minor mod 2 is nonzero over Q); otherwise run sparse integer
    elimination with +-1 pivots taken from the shortest available row (cheap
    Markowitz), and finish any unit-free residue with dense Bareiss.
    """
    import heapq

    cols = [{r: v for r, v in c.items() if v} for c in columns]
    cols = [c for c in cols if c]
    if not cols:
        return 0
    if len(cols) <= 16:
        live = sorted({r for c in cols for r in c})
        if len(live) <= 24:
            idx = {r: i for i, r in enumerate(live)}
            dense = [[0] * len(cols) for _ in live]
            for ci, col in enumerate(cols):
                for r, v in col.items():
                    dense[idx[r]][ci] = v
            return _bareiss_rank(dense)
    if nrows is not None and len(cols) >= 24:
        bound = min(len(cols), nrows)
        if rank_gf2([_to_bits(c) for c in cols]) == bound:
            return bound

    # row-major sparse representation with a column index
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for ci, col in enumerate(cols):
        for r, v in col.items():
            rows.setdefault(r, {})[ci] = v
            col_rows.setdefault(ci, set()).add(r)

    heap = [(len(row), r) for r, row in rows.items()]
    heapq.heapify(heap)
    parked: set[int] = set()  # alive rows currently without a +-1 entry
    rank = 0
    while heap:
        ln, pr = heapq.heappop(heap)
        row = rows.get(pr)
        if row is None or len(row) != ln or pr in parked:
            continue  # stale entry
        pc = None
        best_cc = None
        for c, v in row.items():
            if v == 1 or v == -1:
                cc = len(col_rows[c])
                if best_cc is None or cc < best_cc:
                    pc, best_cc = c, cc
                    if cc == 1:
                        break
        if pc is None:
            parked.add(pr)
            continue
        prow = rows.pop(pr)
        pval = prow[pc]
        for c in prow:
            col_rows[c].discard(pr)
        for r in list(col_rows[pc]):
            other = rows[r]
            factor = other[pc] * pval  # pval in {1,-1}: other -= factor * prow
            for c, v in prow.items():
                w = other.get(c, 0) - factor * v
                if w:
                    if c not in other:
                        col_rows[c].add(r)
                    other[c] = w
                else:
                    if c in other:
                        del other[c]
                        col_rows[c].discard(r)
            if not other:
                del rows[r]
            else:
                heapq.heappush(heap, (len(other), r))
            parked.discard(r)
        rank += 1

    if rows:
        # residual block without unit entries: dense fraction-free elimination
        live_cols = sorted({c for row in rows.values() for c in row})
        idx = {c: k for k, c in enumerate(live_cols)}
        dense = []
        for row in rows.values():
            line = [0] * len(live_cols)
            for c, v in row.items():
                line[idx[c]] = v
            dense.append(line)
        rank += _bareiss_rank(dense)
    return rank


def _bareiss_rank(mat: list[list[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    m = len(mat)
    if m == 0:
        return 0
    n = len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, m):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        for r in range(row + 1, m):
            rv = mat[r][col]
            line = mat[r]
            top = mat[row]
            for c in range(col + 1, n):
                line[c] = (pv * line[c] - rv * top[c]) // prev
            line[col] = 0
        prev = pv
        row += 1
        rank += 1
        if row == m:
            break
    return rank
