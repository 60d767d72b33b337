"""Branch-and-bound and subset-scan kernels over uint64 bitset rows.

The searches keep their whole DFS state in caller-owned arrays so a run can be
paused after a node budget and resumed; the Python side uses that to enforce
wall-clock budgets and to grow the solution buffer.
"""

from __future__ import annotations

import numpy as np

from ._accel import (
    and_count,
    clear_bit,
    count,
    first_common,
    is_empty,
    jit,
    next_bit,
    residual_degrees,
    set_bit,
)

DONE = 0
PAUSED = 1
FULL = 2


@jit
def cover_bound(adj, R, U, nb, X, Y):
    """Upper bound on alpha(G[R]) from a greedy vertex partition.

    Each part is a clique (contributes 1), a 5-cycle (contributes 2), an edge
    or a single vertex (1).  Cycles need not be induced: chords only lower the
    independence number of the part.
    """
    U[:] = R
    ub = 0
    v = next_bit(U, 0)
    while v >= 0:
        clear_bit(U, v)
        nb[:] = adj[v] & U
        a0 = next_bit(nb, 0)
        if a0 < 0:
            ub += 1
            v = next_bit(U, v + 1)
            continue
        X[:] = nb & adj[a0]
        b = next_bit(X, 0)
        if b >= 0:
            clear_bit(U, a0)
            while b >= 0:
                clear_bit(U, b)
                X &= adj[b]
                b = next_bit(X, 0)
            ub += 1
            v = next_bit(U, v + 1)
            continue
        # no triangle on v-a0; look for a 5-cycle v-a-b-c-d
        found = False
        a = a0
        while a >= 0 and not found:
            d = next_bit(nb, a + 1)
            while d >= 0 and not found:
                X[:] = adj[a] & U
                Y[:] = adj[d] & U
                clear_bit(X, d)
                clear_bit(Y, a)
                b = next_bit(X, 0)
                while b >= 0:
                    c = first_common(adj[b], Y)
                    if c >= 0:
                        clear_bit(U, a)
                        clear_bit(U, b)
                        clear_bit(U, c)
                        clear_bit(U, d)
                        found = True
                        break
                    b = next_bit(X, b + 1)
                d = next_bit(nb, d + 1)
            a = next_bit(nb, a + 1)
        if found:
            ub += 2
        else:
            clear_bit(U, a0)
            ub += 1
        v = next_bit(U, v + 1)
    return ub


@jit
def greedy_independent(adj, R, S, deg):
    """Min-degree greedy independent set inside R, written into S; returns its size."""
    size = 0
    while not is_empty(R):
        residual_degrees(adj, R, deg)
        best = -1
        bd = 1 << 30
        for v in range(adj.shape[0]):
            if deg[v] >= 0 and deg[v] < bd:
                bd = deg[v]
                best = v
        set_bit(S, best)
        size += 1
        R &= ~adj[best]
        clear_bit(R, best)
    return size


@jit
def bb_run(adj, Rs, Ss, ks, vs, st, ctr, enum, target, sols, node_limit, deg, U, nb, X, Y):
    """Resumable include/exclude branch and bound.

    ``ctr`` holds ``[depth, best, nsol, nodes]``.  In maximisation mode
    (``enum`` false) ``sols[0]`` tracks the incumbent and subtrees with
    ``k + bound <= best`` are cut.  In enumeration mode every independent set
    of size ``target`` is written to ``sols`` and subtrees with
    ``k + bound < target`` are cut.  Returns DONE, PAUSED (node budget spent)
    or FULL (``sols`` has no room for the next set).
    """
    depth = ctr[0]
    best = ctr[1]
    nsol = ctr[2]
    nodes = ctr[3]
    cap = sols.shape[0]
    stop_at = nodes + node_limit
    status = DONE
    n = adj.shape[0]
    while depth >= 0:
        stage = st[depth]
        if stage == 0:
            if nodes >= stop_at:
                status = PAUSED
                break
            R = Rs[depth]
            S = Ss[depth]
            residual_degrees(adj, R, deg)
            bv = -1
            bd = -1
            for v in range(n):
                d = deg[v]
                if d == 0:
                    # isolated in the residual: in every maximum extension
                    clear_bit(R, v)
                    set_bit(S, v)
                    ks[depth] += 1
                elif d > bd:
                    bd = d
                    bv = v
            k = ks[depth]
            if bv < 0:
                if enum:
                    if k == target:
                        if nsol >= cap:
                            status = FULL
                            break
                        sols[nsol, :] = S
                        nsol += 1
                elif k > best:
                    best = k
                    sols[0, :] = S
                depth -= 1
                continue
            nodes += 1
            ub = cover_bound(adj, R, U, nb, X, Y)
            if enum:
                if k + ub < target:
                    depth -= 1
                    continue
            elif k + ub <= best:
                depth -= 1
                continue
            vs[depth] = bv
            st[depth] = 1
            Rs[depth + 1, :] = R & ~adj[bv]
            clear_bit(Rs[depth + 1], bv)
            Ss[depth + 1, :] = S
            set_bit(Ss[depth + 1], bv)
            ks[depth + 1] = k + 1
            st[depth + 1] = 0
            depth += 1
        elif stage == 1:
            st[depth] = 2
            bv = vs[depth]
            Rs[depth + 1, :] = Rs[depth]
            clear_bit(Rs[depth + 1], bv)
            Ss[depth + 1, :] = Ss[depth]
            ks[depth + 1] = ks[depth]
            st[depth + 1] = 0
            depth += 1
        else:
            depth -= 1
    ctr[0] = depth
    ctr[1] = best
    ctr[2] = nsol
    ctr[3] = nodes
    return status


@jit
def imprimitive_scan(closed, members, alpha, n, out, A, NA, nxt):
    """Scan every nonempty A inside ``members`` with |A| < alpha.

    Reports the sets with ``|A| * n == alpha * |N[A]|`` into ``out`` (first
    ``out.shape[0]`` of them, lexicographic in member order) and returns
    ``(found, scanned)``.  ``closed[v]`` is the closed neighbourhood row.
    """
    m = members.shape[0]
    cap = out.shape[0]
    found = 0
    scanned = 0
    depth = 0
    A[0, :] = 0
    NA[0, :] = 0
    nxt[0] = 0
    while depth >= 0:
        j = nxt[depth]
        if j >= m or depth + 1 >= alpha:
            depth -= 1
            continue
        nxt[depth] = j + 1
        v = members[j]
        A[depth + 1, :] = A[depth]
        set_bit(A[depth + 1], v)
        NA[depth + 1, :] = NA[depth] | closed[v]
        scanned += 1
        if (depth + 1) * n == alpha * count(NA[depth + 1]):
            if found < cap:
                out[found, :] = A[depth + 1]
            found += 1
        depth += 1
        nxt[depth] = j + 1
    return found, scanned


def new_search_state(n: int, nwords: int):
    """Fresh DFS state for :func:`bb_run` rooted at the full vertex set."""
    Rs = np.zeros((n + 2, nwords), dtype=np.uint64)
    Ss = np.zeros((n + 2, nwords), dtype=np.uint64)
    for v in range(n):
        Rs[0, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    ks = np.zeros(n + 2, dtype=np.int64)
    vs = np.zeros(n + 2, dtype=np.int64)
    st = np.zeros(n + 2, dtype=np.int64)
    ctr = np.zeros(4, dtype=np.int64)
    scratch = (
        np.zeros(max(n, 1), dtype=np.int64),
        np.zeros(nwords, dtype=np.uint64),
        np.zeros(nwords, dtype=np.uint64),
        np.zeros(nwords, dtype=np.uint64),
        np.zeros(nwords, dtype=np.uint64),
    )
    return Rs, Ss, ks, vs, st, ctr, scratch


__all__ = [
    "DONE",
    "FULL",
    "PAUSED",
    "and_count",
    "bb_run",
    "cover_bound",
    "greedy_independent",
    "imprimitive_scan",
    "new_search_state",
]
