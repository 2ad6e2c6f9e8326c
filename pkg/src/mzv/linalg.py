"""Exact rank of sparse integer matrices.

Rows are dicts column -> nonzero int. Elimination is fraction-free: the
update row_j <- p * row_j - a * row_piv stays in integers, and each row is
stripped by its gcd afterwards to keep growth in check. Row scaling does not
change rank, so no Bareiss divisor bookkeeping is needed. Pivots are chosen
Markowitz-style (sparsest row, then least-populated column) to limit fill.
"""

from math import gcd


def _strip(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def exact_rank(rows):
    """Rank over Q of the matrix whose rows are dicts col -> int."""
    work = [_strip({c: v for c, v in r.items() if v}) for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        # column population for pivot choice
        colcount = {}
        for r in work:
            for c in r:
                colcount[c] = colcount.get(c, 0) + 1
        best = None
        for i, r in enumerate(work):
            for c in r:
                score = (len(r) - 1) * (colcount[c] - 1)
                if best is None or score < best[0]:
                    best = (score, i, c)
        _, pi, pc = best
        piv = work.pop(pi)
        pval = piv[pc]
        rank += 1
        nxt = []
        for r in work:
            a = r.get(pc)
            if a is None:
                nxt.append(r)
                continue
            new = {}
            for c, v in r.items():
                new[c] = pval * v
            for c, v in piv.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            if new:
                nxt.append(_strip(new))
        work = nxt
    return rank
