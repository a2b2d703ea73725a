"""Pure-Python implementations of the hot kernels.

Same surface as the compiled ``_kernels`` module; selected by
``greedyscs.kernels`` when the extension is unavailable.
"""


def overlap_len(s, t):
    """Length of the longest suffix of ``s`` that is a prefix of ``t``.

    Runs the KMP automaton of ``t`` over the last ``len(t)`` symbols of
    ``s``; the match length after the final symbol is the answer.
    """
    m = len(t)
    if not s or not m:
        return 0
    pi = [0] * m
    k = 0
    for i in range(1, m):
        c = t[i]
        while k and t[k] != c:
            k = pi[k - 1]
        if t[k] == c:
            k += 1
        pi[i] = k
    k = 0
    for i in range(max(0, len(s) - m), len(s)):
        c = s[i]
        if k == m:
            k = pi[k - 1]
        while k and t[k] != c:
            k = pi[k - 1]
        if t[k] == c:
            k += 1
    return k


def overlap_matrix(strings):
    n = len(strings)
    return [
        [0 if i == j else overlap_len(strings[i], strings[j]) for j in range(n)]
        for i in range(n)
    ]


def max_overlap_path(weights):
    """Hamiltonian path maximizing the summed edge weights.

    ``weights[i][j]`` is the gain of placing ``j`` right after ``i``.
    Returns ``(best_total, order)`` where ``order`` is the lexicographically
    smallest optimal visiting order.

    ``best[mask][i]`` holds the best gain of a path that starts at ``i`` and
    visits exactly the members of ``mask``; building it from the start node
    makes the lexicographic reconstruction a forward greedy walk.
    """
    n = len(weights)
    if n == 0:
        return 0, []
    full = (1 << n) - 1
    neg = None
    best = [None] * (1 << n)
    for i in range(n):
        row = [neg] * n
        row[i] = 0
        best[1 << i] = row
    bits = [1 << i for i in range(n)]
    for mask in range(1, full + 1):
        if best[mask] is not None:
            continue
        row = [neg] * n
        members = [i for i in range(n) if mask & bits[i]]
        for i in members:
            rest = best[mask ^ bits[i]]
            wi = weights[i]
            top = neg
            for j in members:
                if j == i:
                    continue
                v = rest[j]
                if v is None:
                    continue
                v += wi[j]
                if top is None or v > top:
                    top = v
            row[i] = top
        best[mask] = row

    total = max(best[full])
    order = []
    mask = full
    cur = best[full].index(total)
    need = total
    while True:
        order.append(cur)
        rest = mask ^ bits[cur]
        if not rest:
            break
        row = best[rest]
        wc = weights[cur]
        for j in range(n):
            if rest & bits[j] and row[j] is not None and wc[j] + row[j] == need:
                need -= wc[j]
                mask = rest
                cur = j
                break
    return total, order
