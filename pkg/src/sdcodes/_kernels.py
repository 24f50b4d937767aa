"""Compiled inner loops for codeword enumeration.

Codewords are handled in systematic form: the message part contributes its
own Hamming weight, and only the redundancy part is stored, packed into
``W`` 64-bit words per generator row.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _popcount(typingctx, x):
    sig = types.int64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@intrinsic
def _ctz(typingctx, x):
    sig = types.int64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.cttz(args[0], context.get_constant(types.boolean, False))

    return sig, codegen


@njit(nogil=True, cache=True)
def popcount64(x):
    return _popcount(np.uint64(x))


@njit(nogil=True, cache=True)
def _weight(cur):
    s = 0
    for w in range(cur.shape[0]):
        s += _popcount(cur[w])
    return s


@njit(nogil=True, cache=True)
def _tally(msg_weight, cur, wmax, min_red, counts):
    r = _weight(cur)
    tot = msg_weight + r
    if tot <= wmax and r >= min_red:
        counts[tot] += 1


@njit(nogil=True, cache=True)
def _swap(cur, red, out, inn):
    for w in range(cur.shape[0]):
        cur[w] ^= red[out, w] ^ red[inn, w]


@njit(nogil=True, cache=True)
def census_block(red, t, m, wmax, min_red, counts):
    """Tally every t-subset of rows whose largest member is ``m``.

    The remaining ``t - 1`` members range over ``{0..m-1}`` in revolving-door
    order, so each step swaps exactly one row out and one row in.
    """
    nw = red.shape[1]
    cur = np.zeros(nw, dtype=np.uint64)
    if t == 0:
        _tally(0, cur, wmax, min_red, counts)
        return
    s = t - 1
    if s > m:
        return
    for w in range(nw):
        cur[w] = red[m, w]
    for i in range(s):
        for w in range(nw):
            cur[w] ^= red[i, w]
    _tally(t, cur, wmax, min_red, counts)
    if s == 0 or s == m:
        return
    if s == 1:
        for i in range(1, m):
            _swap(cur, red, i - 1, i)
            _tally(t, cur, wmax, min_red, counts)
        return

    # Knuth, TAOCP 7.2.1.3 Algorithm R, 1-based c[1..s], sentinels c[s+1], c[s+2]
    c = np.zeros(s + 3, dtype=np.int64)
    for j in range(1, s + 1):
        c[j] = j - 1
    c[s + 1] = m
    c[s + 2] = 0
    odd = (s & 1) == 1
    while True:
        if odd:
            if c[1] + 1 < c[2]:
                _swap(cur, red, c[1], c[1] + 1)
                c[1] += 1
                _tally(t, cur, wmax, min_red, counts)
                continue
            j = 2
            step = 4
        else:
            if c[1] > 0:
                _swap(cur, red, c[1], c[1] - 1)
                c[1] -= 1
                _tally(t, cur, wmax, min_red, counts)
                continue
            j = 2
            step = 5
        moved = False
        while True:
            if step == 4:
                if c[j] >= j:
                    _swap(cur, red, c[j], j - 2)
                    c[j] = c[j - 1]
                    c[j - 1] = j - 2
                    moved = True
                    break
                j += 1
                step = 5
            else:
                if j <= s and c[j] + 1 < c[j + 1]:
                    _swap(cur, red, j - 2, c[j] + 1)
                    c[j - 1] = c[j]
                    c[j] = c[j] + 1
                    moved = True
                    break
                j += 1
                if j > s:
                    break
                step = 4
        if not moved:
            return
        _tally(t, cur, wmax, min_red, counts)


@njit(nogil=True, cache=True)
def census_blocks(red, blocks, wmax, min_red, counts):
    for b in range(blocks.shape[0]):
        census_block(red, blocks[b, 0], blocks[b, 1], wmax, min_red, counts)


@njit(nogil=True, cache=True)
def exhaustive_range(red, start, stop, counts):
    """Tally codewords for messages ``gray(start) .. gray(stop - 1)``.

    Consecutive Gray-code messages differ in one bit, so each step is one
    row XOR plus popcounts.
    """
    nw = red.shape[1]
    k = red.shape[0]
    cur = np.zeros(nw, dtype=np.uint64)
    g = np.uint64(start ^ (start >> 1))
    for bit in range(k):
        if (g >> np.uint64(bit)) & np.uint64(1):
            for w in range(nw):
                cur[w] ^= red[bit, w]
    mw = _popcount(g)
    i = start
    while True:
        counts[mw + _weight(cur)] += 1
        i += 1
        if i >= stop:
            break
        b = _ctz(np.uint64(i))
        for w in range(nw):
            cur[w] ^= red[b, w]
        mask = np.uint64(1) << np.uint64(b)
        if g & mask:
            mw -= 1
        else:
            mw += 1
        g ^= mask


# Single-word specialisations: redundancy fits in one uint64 (k <= 64 for
# self-dual codes of length <= 128), so the running XOR lives in a register.


@njit(nogil=True, cache=True)
def census_block1(red, t, m, wmax, min_red, counts):
    if t == 0:
        if min_red <= 0:
            counts[0] += 1
        return
    s = t - 1
    if s > m:
        return
    cur = red[m]
    for i in range(s):
        cur ^= red[i]
    r = _popcount(cur)
    if t + r <= wmax and r >= min_red:
        counts[t + r] += 1
    if s == 0 or s == m:
        return
    if s == 1:
        for i in range(1, m):
            cur ^= red[i - 1] ^ red[i]
            r = _popcount(cur)
            if t + r <= wmax and r >= min_red:
                counts[t + r] += 1
        return

    c = np.zeros(s + 3, dtype=np.int64)
    for j in range(1, s + 1):
        c[j] = j - 1
    c[s + 1] = m
    odd = (s & 1) == 1
    while True:
        c1 = c[1]
        if odd:
            if c1 + 1 < c[2]:
                cur ^= red[c1] ^ red[c1 + 1]
                c[1] = c1 + 1
                r = _popcount(cur)
                if t + r <= wmax and r >= min_red:
                    counts[t + r] += 1
                continue
            j = 2
            step = 4
        else:
            if c1 > 0:
                cur ^= red[c1] ^ red[c1 - 1]
                c[1] = c1 - 1
                r = _popcount(cur)
                if t + r <= wmax and r >= min_red:
                    counts[t + r] += 1
                continue
            j = 2
            step = 5
        moved = False
        while True:
            if step == 4:
                if c[j] >= j:
                    cur ^= red[c[j]] ^ red[j - 2]
                    c[j] = c[j - 1]
                    c[j - 1] = j - 2
                    moved = True
                    break
                j += 1
                step = 5
            else:
                if j <= s and c[j] + 1 < c[j + 1]:
                    cur ^= red[j - 2] ^ red[c[j] + 1]
                    c[j - 1] = c[j]
                    c[j] = c[j] + 1
                    moved = True
                    break
                j += 1
                if j > s:
                    break
                step = 4
        if not moved:
            return
        r = _popcount(cur)
        if t + r <= wmax and r >= min_red:
            counts[t + r] += 1


@njit(nogil=True, cache=True)
def census_blocks1(red, blocks, wmax, min_red, counts):
    for b in range(blocks.shape[0]):
        census_block1(red, blocks[b, 0], blocks[b, 1], wmax, min_red, counts)


@njit(nogil=True, cache=True)
def exhaustive_range1(red, start, stop, counts):
    k = red.shape[0]
    cur = np.uint64(0)
    g = np.uint64(start ^ (start >> 1))
    for bit in range(k):
        if (g >> np.uint64(bit)) & np.uint64(1):
            cur ^= red[bit]
    mw = _popcount(g)
    i = start
    while True:
        counts[mw + _popcount(cur)] += 1
        i += 1
        if i >= stop:
            break
        b = _ctz(np.uint64(i))
        cur ^= red[b]
        mask = np.uint64(1) << np.uint64(b)
        if g & mask:
            mw -= 1
        else:
            mw += 1
        g ^= mask
