"""Independent brute-force oracles used by the test-suite.

Nothing here imports the search code it is meant to check.
"""

from itertools import product

from effectalg.core import UNDEF


def paste_mv_blocks(blocks):
    """Sum table of a pasting of MV-blocks given in coordinates.

    ``blocks`` is a list of (tops, {name: vector}) pairs; each block is the
    product of chains with the given tops, and a sum is defined when it is
    defined inside a block containing both summands.  Returns
    (names, entries) with one entry per unordered pair of nonzero elements.
    """
    names = []
    for _, elems in blocks:
        for nm in elems:
            if nm not in names:
                names.append(nm)
    sums = {}
    for tops, elems in blocks:
        inv = {tuple(v): nm for nm, v in elems.items()}
        assert len(inv) == len(elems) == _size(tops), "block must list every vector once"
        for x, y in product(elems, repeat=2):
            vec = tuple(p + q for p, q in zip(elems[x], elems[y]))
            if all(v <= t for v, t in zip(vec, tops)):
                old = sums.setdefault((min(x, y), max(x, y)), inv[vec])
                assert old == inv[vec], f"blocks disagree on {x}+{y}"
    return names, sums


def _size(tops):
    out = 1
    for t in tops:
        out *= t + 1
    return out


def naive_closure(E, M):
    """Iterate M_{n+1} = {x, y ⊖ x : x ≤ y, x ≤ y′, y ∈ M_n} from scratch."""
    n = len(E)
    cur = set(M)
    while True:
        nxt = set(cur)
        for y in cur:
            for x in range(n):
                if any(E.table[x][c] == y for c in range(n)) and \
                        any(E.table[x][c] == E.comp[y] for c in range(n)):
                    nxt.add(x)
                    nxt.update(c for c in range(n) if E.table[x][c] == y)
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def naive_fold(E, seq):
    acc = E.zero
    for m in seq:
        acc = E.table[acc][m]
        if acc == UNDEF:
            return None
    return acc


def naive_families(E, X, max_len):
    """All orthogonal sequences (any order) of nonzero X-elements, as sorted tuples."""
    pool = sorted(x for x in X if x != E.zero)
    out = set()
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for seq in frontier:
            for x in pool:
                s = seq + (x,)
                if naive_fold(E, s) is not None:
                    nxt.append(s)
                    out.add(tuple(sorted(s)))
        frontier = nxt
    return out


def naive_cover_exists(E, M, X, max_len):
    """Cover existence by checking every subset of every orthogonal sequence."""
    M = set(M)
    if M <= {E.zero}:
        return True
    for fam in naive_families(E, X, max_len):
        reach = set()
        for mask in range(1 << len(fam)):
            reach.add(naive_fold(E, [fam[i] for i in range(len(fam)) if mask >> i & 1]))
        if M <= reach:
            return True
    return False


def longest_chain(E):
    """Longest strict chain 0 < ... < 1 by exhaustive DFS over the order."""
    n = len(E)
    best = 0

    def dfs(x, k):
        nonlocal best
        if x == E.one:
            best = max(best, k)
        for y in range(n):
            if y != x and E.order[x][y]:
                dfs(y, k + 1)

    dfs(E.zero, 0)
    return best


def naive_tables(n):
    """Every valid table on n elements with 0 = id 0 and 1 = id n-1 (brute force)."""
    from effectalg.core import validate_table
    inner = list(range(1, n - 1))
    pairs = [(a, b) for a in inner for b in inner if a <= b]
    for values in product([UNDEF, *range(n)], repeat=len(pairs)):
        t = [[UNDEF] * n for _ in range(n)]
        for x in range(n):
            t[0][x] = t[x][0] = x
        for (a, b), v in zip(pairs, values):
            t[a][b] = t[b][a] = v
        if not validate_table(t, 0, n - 1):
            yield t
