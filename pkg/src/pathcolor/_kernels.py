"""numba kernels for the built-in properties (codes: 0 proper, 1 strong,
2 nonrepetitive). Graphs arrive in CSR form: ``start[v]:start[v+1]`` indexes
``nbr`` / ``eid`` for vertex v."""
import numpy as np
from numba import njit


@njit(cache=True)
def extends(code, seq, last):
    """Is seq[0..last] valid, given seq[0..last-1] is?"""
    c = seq[last]
    if code == 0:
        return last == 0 or seq[last - 1] != c
    if code == 1:
        if last >= 1 and seq[last - 1] == c:
            return False
        if last >= 2 and seq[last - 2] == c:
            return False
        return True
    n = last + 1
    for h in range(1, n // 2 + 1):
        same = True
        for i in range(h):
            if seq[n - 2 * h + i] != seq[n - h + i]:
                same = False
                break
        if same:
            return False
    return True


@njit(cache=True)
def search_from(n, start, nbr, eid, colors, code, src, targets, reached, paths, plen, record):
    """DFS over simple paths from ``src`` whose color sequence stays valid.

    Marks ``reached[v]``; stops once every ``targets[v]`` vertex is reached.
    With ``record`` the first path found to v is stored in ``paths[v]``.
    Returns the number of targets left unreached.
    """
    remaining = 0
    for v in range(n):
        if targets[v] and not reached[v]:
            remaining += 1
    if remaining == 0:
        return 0
    pv = np.empty(n, np.int64)
    it = np.empty(n, np.int64)
    cs = np.empty(n, np.int64)
    onpath = np.zeros(n, np.bool_)
    depth = 0
    pv[0] = src
    it[0] = start[src]
    onpath[src] = True
    while depth >= 0:
        v = pv[depth]
        if it[depth] < start[v + 1]:
            k = it[depth]
            it[depth] += 1
            w = nbr[k]
            if onpath[w]:
                continue
            cs[depth] = colors[eid[k]]
            if not extends(code, cs, depth):
                continue
            depth += 1
            pv[depth] = w
            it[depth] = start[w]
            onpath[w] = True
            if not reached[w]:
                reached[w] = True
                if record:
                    for i in range(depth + 1):
                        paths[w, i] = pv[i]
                    plen[w] = depth + 1
                if targets[w]:
                    remaining -= 1
                    if remaining == 0:
                        return 0
        else:
            onpath[v] = False
            depth -= 1
    return remaining


@njit(cache=True)
def failing_pairs(n, start, nbr, eid, colors, code, stop_at):
    """Number of pairs u < v with no valid u-v path (searched from u).

    Returns early once the count exceeds ``stop_at`` (pass n*n to disable).
    """
    bad = 0
    reached = np.zeros(n, np.bool_)
    targets = np.zeros(n, np.bool_)
    dummy_paths = np.empty((1, 1), np.int64)
    dummy_len = np.empty(1, np.int64)
    for u in range(n - 1):
        reached[:] = False
        targets[:] = False
        for v in range(u + 1, n):
            targets[v] = True
        reached[u] = True
        bad += search_from(n, start, nbr, eid, colors, code, u, targets, reached, dummy_paths, dummy_len, False)
        if bad > stop_at:
            return bad
    return bad


@njit(cache=True)
def anneal(n, start, nbr, eid, m, k, code, budget, seed, t_start, t_end, colors):
    """Simulated annealing over k-colorings; energy = failing pairs.

    ``colors`` is overwritten with the final state. Returns its energy.
    """
    np.random.seed(seed)
    for e in range(m):
        colors[e] = np.random.randint(1, k + 1)
    big = n * n
    energy = failing_pairs(n, start, nbr, eid, colors, code, big)
    if energy == 0 or k < 2:
        return energy
    ratio = t_end / t_start
    for step in range(budget):
        e = np.random.randint(0, m)
        old = colors[e]
        new = np.random.randint(1, k)
        if new >= old:
            new += 1
        colors[e] = new
        temp = t_start * ratio ** (step / budget)
        # anything above this bound would be rejected anyway, so cut the search short
        u = np.random.random()
        limit = energy - temp * np.log(u) if u > 0 else big
        cand = failing_pairs(n, start, nbr, eid, colors, code, int(limit))
        if cand <= energy or cand <= limit:
            energy = cand
            if energy == 0:
                return 0
        else:
            colors[e] = old
    return energy


@njit(cache=True)
def exact_search(n, start, nbr, eid, m, k, code, colors):
    """Enumerate restricted-growth colorings with exactly k colors; stop at
    the first connected one (left in ``colors``). Returns True if found."""
    # prefix maxima: mx[i] = max color among colors[0..i]
    mx = np.zeros(m, np.int64)
    colors[0] = 1
    mx[0] = 1
    i = 1
    if m == 1:
        return k == 1 and failing_pairs(n, start, nbr, eid, colors, code, 0) == 0
    colors[1] = 0
    while i >= 1:
        cap = mx[i - 1] + 1
        if cap > k:
            cap = k
        if colors[i] < cap:
            colors[i] += 1
            mx[i] = mx[i - 1] if mx[i - 1] >= colors[i] else colors[i]
            # the remaining edges must still be able to introduce the missing colors
            if k - mx[i] > m - 1 - i:
                continue
            if i == m - 1:
                if mx[i] == k and failing_pairs(n, start, nbr, eid, colors, code, 0) == 0:
                    return True
            else:
                i += 1
                colors[i] = 0
        else:
            i -= 1
    return False
