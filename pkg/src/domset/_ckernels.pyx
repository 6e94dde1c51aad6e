# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in _kernels.py.

Masks arrive as Python ints and are unpacked into uint64 word arrays; the
exhaustive graph scan and the branch-and-bound recursion then run as plain
C loops.  Branching order, pruning and answers match the pure versions
(see _kernels.py for the algorithm documentation).
"""

import time

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t, uint32_t, uint64_t
from libc.string cimport memset

cdef extern from *:
    """
    #include <stdint.h>
    static inline int ds_pop64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int ds_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int ds_pop64(uint64_t x) nogil
    int ds_ctz64(uint64_t x) nogil

DEF MEMO_BITS = 21            # 2^21 slots
DEF MEMO_PROBES = 8
DEF MAX_SIG_ATOMS = 16


# ---------------------------------------------------------------- graph scan

cdef inline int _graph_value(uint32_t g, int ntri, uint32_t* tri, uint64_t* etm) nogil:
    cdef int e_cnt = ds_pop64(g)
    cdef uint64_t present = 0
    cdef int t_cnt = 0
    cdef int i, e0
    cdef uint32_t rem
    for i in range(ntri):
        if (g & tri[i]) == tri[i]:
            present |= (<uint64_t>1) << i
            t_cnt += 1
    e0 = 0
    rem = g
    while rem:
        i = ds_ctz64(rem)
        rem &= rem - 1
        if (present & etm[i]) == 0:
            e0 += 1
    return 2 * e_cnt - 2 * t_cnt - e0


def scan_max_f(int m, list tri_masks, list edge_tri_masks):
    if m > 28:
        raise ValueError(f"edge-slot count {m} too large for the exhaustive scan")
    cdef int ntri = len(tri_masks)
    if ntri > 64:
        raise ValueError("more than 64 triangles; scan assumes one presence word")
    cdef uint32_t* tri = <uint32_t*> PyMem_Malloc(max(ntri, 1) * sizeof(uint32_t))
    cdef uint64_t* etm = <uint64_t*> PyMem_Malloc(max(m, 1) * sizeof(uint64_t))
    if tri == NULL or etm == NULL:
        PyMem_Free(tri)
        PyMem_Free(etm)
        raise MemoryError()
    cdef int i
    cdef uint64_t g, total
    cdef int best, val
    try:
        for i in range(ntri):
            tri[i] = tri_masks[i]
        for i in range(m):
            etm[i] = edge_tri_masks[i]
        total = (<uint64_t>1) << m
        best = -(1 << 30)
        with nogil:
            for g in range(total):
                val = _graph_value(<uint32_t>g, ntri, tri, etm)
                if val > best:
                    best = val
        maximizers = []
        for g in range(total):
            if _graph_value(<uint32_t>g, ntri, tri, etm) == best:
                maximizers.append(g)
        return best, maximizers
    finally:
        PyMem_Free(tri)
        PyMem_Free(etm)


# ------------------------------------------------------------ memo table

cdef class MemoTable:
    """Open-addressing table of refuted (U, budget) facts, fixed capacity.

    Deterministic: linear probing, and a slot is reclaimed only when the
    incoming refuted budget exceeds the weakest probed entry.
    """

    cdef uint64_t* keys      # capacity * nwords
    cdef int* budgets        # capacity, -1 = empty
    cdef int nwords
    cdef uint64_t mask

    def __cinit__(self, int nwords):
        cdef uint64_t capacity = (<uint64_t>1) << MEMO_BITS
        self.nwords = nwords
        self.mask = capacity - 1
        self.keys = <uint64_t*> PyMem_Malloc(capacity * nwords * sizeof(uint64_t))
        self.budgets = <int*> PyMem_Malloc(capacity * sizeof(int))
        if self.keys == NULL or self.budgets == NULL:
            raise MemoryError()
        memset(self.budgets, 0xFF, capacity * sizeof(int))

    def __dealloc__(self):
        PyMem_Free(self.keys)
        PyMem_Free(self.budgets)


cdef inline uint64_t _hash_words(uint64_t* w, int nw) nogil:
    cdef uint64_t h = <uint64_t>0x9E3779B97F4A7C15
    cdef int i
    for i in range(nw):
        h ^= w[i]
        h *= <uint64_t>0xBF58476D1CE4E5B9
        h ^= h >> 29
    return h


cdef inline bint _words_eq(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i] != b[i]:
            return False
    return True


cdef int _memo_get(MemoTable memo, uint64_t* U) nogil:
    cdef uint64_t h = _hash_words(U, memo.nwords)
    cdef uint64_t slot
    cdef int p
    for p in range(MEMO_PROBES):
        slot = (h + p) & memo.mask
        if memo.budgets[slot] < 0:
            return -1
        if _words_eq(memo.keys + slot * memo.nwords, U, memo.nwords):
            return memo.budgets[slot]
    return -1


cdef void _memo_put(MemoTable memo, uint64_t* U, int budget) nogil:
    cdef uint64_t h = _hash_words(U, memo.nwords)
    cdef uint64_t slot, weakest_slot = 0
    cdef int p, weakest = 1 << 30
    cdef int w
    for p in range(MEMO_PROBES):
        slot = (h + p) & memo.mask
        if memo.budgets[slot] < 0:
            for w in range(memo.nwords):
                (memo.keys + slot * memo.nwords)[w] = U[w]
            memo.budgets[slot] = budget
            return
        if _words_eq(memo.keys + slot * memo.nwords, U, memo.nwords):
            if budget > memo.budgets[slot]:
                memo.budgets[slot] = budget
            return
        if memo.budgets[slot] < weakest:
            weakest = memo.budgets[slot]
            weakest_slot = slot
    if budget > weakest:
        for w in range(memo.nwords):
            (memo.keys + weakest_slot * memo.nwords)[w] = U[w]
        memo.budgets[weakest_slot] = budget


def make_memo(int nwords):
    return MemoTable(nwords)


# ------------------------------------------------------------ search kernel

cdef struct SearchCtx:
    int nv
    int nwords
    int t
    int n_ground
    bint independent
    uint64_t* nbhd        # nv * nwords
    uint64_t* kw          # nwords (lower-level vertices)
    uint64_t* lw          # nwords (upper-level vertices)
    uint64_t* ground      # nv ground masks (one word, n <= 64)
    int* pack_order       # nv
    int static_mkl
    int static_mlk
    int maxcand
    int* cand_idx         # (t+2) * maxcand
    int* cand_cov
    unsigned char* cand_drop
    uint64_t* cand_mask   # (t+2) * maxcand * nwords
    uint64_t* ustack      # (t+2) * nwords
    uint64_t* atom_stack  # (t+2) * (n_ground+1) atoms per level
    int* atom_count       # t+2
    uint64_t* sig_lo      # (t+2) * maxcand
    uint64_t* sig_hi
    uint64_t* scratch     # nwords
    int* chosen           # t+1
    int found_len
    int64_t nodes
    double deadline       # <0: none
    int64_t max_nodes     # <0: none
    bint aborted


cdef inline bint _is_zero(uint64_t* a, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i]:
            return False
    return True


cdef inline int _pop_and(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int i, s = 0
    for i in range(nw):
        s += ds_pop64(a[i] & b[i])
    return s


cdef inline int _pop_and3(uint64_t* a, uint64_t* b, uint64_t* c, int nw) nogil:
    cdef int i, s = 0
    for i in range(nw):
        s += ds_pop64(a[i] & b[i] & c[i])
    return s


cdef inline bint _and_disjoint(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i] & b[i]:
            return False
    return True


cdef inline bint _subset(uint64_t* a, uint64_t* b, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i] & ~b[i]:
            return False
    return True


cdef inline int _lowest(uint64_t* a, int nw) nogil:
    cdef int i
    for i in range(nw):
        if a[i]:
            return 64 * i + ds_ctz64(a[i])
    return -1


cdef inline bint _get_bit(uint64_t* a, int v) nogil:
    return (a[v >> 6] >> (v & 63)) & 1


cdef bint _counting_feasible(int rk, int rl, int mkl, int mlk, int q) nogil:
    cdef int y, x, rem, need
    for y in range(q + 1):
        x = rk - y * mkl
        if x < 0:
            x = 0
        rem = rl - y
        if rem > 0:
            if mlk == 0:
                continue
            need = (rem + mlk - 1) // mlk
            if need > x:
                x = need
        if x + y <= q:
            return True
    return False


cdef bint _prune(SearchCtx* ctx, uint64_t* U, int q) nogil:
    cdef int nw = ctx.nwords
    cdef int rk = _pop_and(U, ctx.kw, nw)
    cdef int rl = _pop_and(U, ctx.lw, nw)
    if rk == 0 and rl == 0:
        return False
    if not _counting_feasible(rk, rl, ctx.static_mkl, ctx.static_mlk, q):
        return True
    cdef int mkl = 0, mlk = 0
    cdef int v, c, w
    cdef uint64_t bits
    for w in range(nw):
        bits = U[w] if ctx.independent else (ctx.kw[w] | ctx.lw[w])
        while bits:
            v = 64 * w + ds_ctz64(bits)
            bits &= bits - 1
            if _get_bit(ctx.kw, v):
                c = _pop_and3(ctx.nbhd + v * nw, U, ctx.lw, nw)
                if c > mlk:
                    mlk = c
            else:
                c = _pop_and3(ctx.nbhd + v * nw, U, ctx.kw, nw)
                if c > mkl:
                    mkl = c
    if not _counting_feasible(rk, rl, mkl, mlk, q):
        return True
    memset(ctx.scratch, 0, nw * sizeof(uint64_t))
    cdef int count = 0
    cdef int i
    for i in range(ctx.nv):
        v = ctx.pack_order[i]
        if _get_bit(U, v) and _and_disjoint(ctx.nbhd + v * nw, ctx.scratch, nw):
            count += 1
            if count > q:
                return True
            for w in range(nw):
                ctx.scratch[w] |= (ctx.nbhd + v * nw)[w]
    return False


cdef int _dfs(SearchCtx* ctx, MemoTable memo, int depth):
    cdef int nw = ctx.nwords
    cdef uint64_t* U = ctx.ustack + depth * nw
    ctx.nodes += 1
    if (ctx.nodes & 1023) == 0:
        if ctx.deadline >= 0 and time.monotonic() > ctx.deadline:
            ctx.aborted = True
            return -1
        if ctx.max_nodes >= 0 and ctx.nodes > ctx.max_nodes:
            ctx.aborted = True
            return -1
    if _is_zero(U, nw):
        ctx.found_len = depth
        return 1
    cdef int q = ctx.t - depth
    if q <= 0:
        return 0
    if _memo_get(memo, U) >= q:
        return 0
    if _prune(ctx, U, q):
        _memo_put(memo, U, q)
        return 0

    cdef int v = _lowest(U, nw)
    cdef int* idx = ctx.cand_idx + depth * ctx.maxcand
    cdef int* cov = ctx.cand_cov + depth * ctx.maxcand
    cdef unsigned char* drop = ctx.cand_drop + depth * ctx.maxcand
    cdef uint64_t* cmask = ctx.cand_mask + (<int64_t>depth) * ctx.maxcand * nw
    cdef uint64_t* nv_words = ctx.nbhd + v * nw
    cdef int natoms = ctx.atom_count[depth]
    cdef uint64_t* atoms = ctx.atom_stack + (<int64_t>depth) * (ctx.n_ground + 1)
    cdef uint64_t* slo = ctx.sig_lo + (<int64_t>depth) * ctx.maxcand
    cdef uint64_t* shi = ctx.sig_hi + (<int64_t>depth) * ctx.maxcand
    cdef int ncand = 0
    cdef int w, c, i, j
    cdef uint64_t bits, g
    cdef uint64_t sig_lo, sig_hi
    cdef bint use_sig = natoms <= MAX_SIG_ATOMS
    cdef bint dup
    for w in range(nw):
        bits = nv_words[w] & U[w] if ctx.independent else nv_words[w]
        while bits:
            c = 64 * w + ds_ctz64(bits)
            bits &= bits - 1
            if use_sig:
                # 8-bit packed atom-intersection signature, two words
                g = ctx.ground[c]
                sig_lo = sig_hi = 0
                for i in range(natoms):
                    if i < 8:
                        sig_lo |= (<uint64_t>ds_pop64(g & atoms[i])) << (8 * i)
                    else:
                        sig_hi |= (<uint64_t>ds_pop64(g & atoms[i])) << (8 * (i - 8))
                dup = False
                for j in range(ncand):
                    if slo[j] == sig_lo and shi[j] == sig_hi:
                        dup = True
                        break
                if dup:
                    continue  # same signature as an earlier (colex-lower) candidate
                slo[ncand] = sig_lo
                shi[ncand] = sig_hi
            for i in range(nw):
                cmask[ncand * nw + i] = (ctx.nbhd + c * nw)[i] & U[i]
            idx[ncand] = c
            cov[ncand] = _pop_and(ctx.nbhd + c * nw, U, nw)
            drop[ncand] = 0
            ncand += 1
    if not ctx.independent and ncand > 1:
        for i in range(ncand):
            for j in range(ncand):
                if i == j:
                    continue
                if _subset(cmask + i * nw, cmask + j * nw, nw):
                    if not _words_eq(cmask + i * nw, cmask + j * nw, nw) or idx[j] < idx[i]:
                        drop[i] = 1
                        break
    cdef int m = 0
    for i in range(ncand):
        if not drop[i]:
            idx[m] = idx[i]
            cov[m] = cov[i]
            m += 1
    cdef int key_i, key_c
    for i in range(1, m):
        key_i = idx[i]
        key_c = cov[i]
        j = i - 1
        while j >= 0 and (cov[j] < key_c or (cov[j] == key_c and idx[j] > key_i)):
            idx[j + 1] = idx[j]
            cov[j + 1] = cov[j]
            j -= 1
        idx[j + 1] = key_i
        cov[j + 1] = key_c

    cdef uint64_t* Unext = ctx.ustack + (depth + 1) * nw
    cdef uint64_t* child_atoms = ctx.atom_stack + (<int64_t>(depth + 1)) * (ctx.n_ground + 1)
    cdef int r, na
    cdef uint64_t inter, diff
    for i in range(m):
        c = idx[i]
        for w in range(nw):
            Unext[w] = U[w] & ~(ctx.nbhd + c * nw)[w]
        g = ctx.ground[c]
        na = 0
        for j in range(natoms):
            inter = atoms[j] & g
            diff = atoms[j] & ~g
            if inter:
                child_atoms[na] = inter
                na += 1
            if diff:
                child_atoms[na] = diff
                na += 1
        ctx.atom_count[depth + 1] = na
        ctx.chosen[depth] = c
        r = _dfs(ctx, memo, depth + 1)
        if r != 0:
            return r
    _memo_put(memo, U, q)
    return 0


def search_leq(list nbhd, object kmask, list ground, int t, bint independent,
               object deadline=None, object max_nodes=None, MemoTable memo=None):
    cdef int nv = len(nbhd)
    cdef int nwords = (nv + 63) >> 6
    if t < 0:
        raise ValueError("target size must be nonnegative")
    if memo is None:
        memo = MemoTable(nwords)
    elif memo.nwords != nwords:
        raise ValueError("memo table built for a different universe size")
    cdef int maxcand = 1
    for v in range(nv):
        c = (<object>nbhd[v]).bit_count()
        if c > maxcand:
            maxcand = c
    cdef int64_t words = (<int64_t>(t + 2)) * maxcand * nwords
    if words * 8 > (1 << 28):
        raise ValueError("instance too large for the compiled search buffers")

    ground_full = 0
    for gm in ground:
        ground_full |= gm
    cdef int n_ground = int(ground_full).bit_length()
    if n_ground > 64:
        raise ValueError("ground masks must fit one word (n <= 64)")

    cdef SearchCtx ctx
    ctx.nv = nv
    ctx.nwords = nwords
    ctx.t = t
    ctx.n_ground = n_ground
    ctx.independent = independent
    ctx.nodes = 0
    ctx.found_len = -1
    ctx.aborted = False
    ctx.deadline = deadline if deadline is not None else -1.0
    ctx.max_nodes = max_nodes if max_nodes is not None else -1
    ctx.maxcand = maxcand

    ctx.nbhd = <uint64_t*> PyMem_Malloc(<size_t>nv * nwords * sizeof(uint64_t))
    ctx.kw = <uint64_t*> PyMem_Malloc(nwords * sizeof(uint64_t))
    ctx.lw = <uint64_t*> PyMem_Malloc(nwords * sizeof(uint64_t))
    ctx.ground = <uint64_t*> PyMem_Malloc(max(nv, 1) * sizeof(uint64_t))
    ctx.pack_order = <int*> PyMem_Malloc(nv * sizeof(int))
    ctx.cand_idx = <int*> PyMem_Malloc(<size_t>(t + 2) * maxcand * sizeof(int))
    ctx.cand_cov = <int*> PyMem_Malloc(<size_t>(t + 2) * maxcand * sizeof(int))
    ctx.cand_drop = <unsigned char*> PyMem_Malloc(<size_t>(t + 2) * maxcand)
    ctx.cand_mask = <uint64_t*> PyMem_Malloc(<size_t>words * sizeof(uint64_t))
    ctx.ustack = <uint64_t*> PyMem_Malloc(<size_t>(t + 2) * nwords * sizeof(uint64_t))
    ctx.atom_stack = <uint64_t*> PyMem_Malloc(<size_t>(t + 2) * (n_ground + 1) * sizeof(uint64_t))
    ctx.atom_count = <int*> PyMem_Malloc(<size_t>(t + 2) * sizeof(int))
    ctx.sig_lo = <uint64_t*> PyMem_Malloc(<size_t>(t + 2) * maxcand * sizeof(uint64_t))
    ctx.sig_hi = <uint64_t*> PyMem_Malloc(<size_t>(t + 2) * maxcand * sizeof(uint64_t))
    ctx.scratch = <uint64_t*> PyMem_Malloc(nwords * sizeof(uint64_t))
    ctx.chosen = <int*> PyMem_Malloc((t + 1) * sizeof(int))
    if (ctx.nbhd == NULL or ctx.kw == NULL or ctx.lw == NULL or
            ctx.ground == NULL or ctx.pack_order == NULL or
            ctx.cand_idx == NULL or ctx.cand_cov == NULL or
            ctx.cand_drop == NULL or ctx.cand_mask == NULL or
            ctx.ustack == NULL or ctx.atom_stack == NULL or
            ctx.atom_count == NULL or ctx.scratch == NULL or
            ctx.sig_lo == NULL or ctx.sig_hi == NULL or
            ctx.chosen == NULL):
        _free_ctx(&ctx)
        raise MemoryError()

    cdef int w, v2
    cdef object mask_obj
    try:
        for v2 in range(nv):
            mask_obj = nbhd[v2]
            for w in range(nwords):
                ctx.nbhd[v2 * nwords + w] = <uint64_t>((mask_obj >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
            ctx.ground[v2] = <uint64_t>(<object>ground[v2])
        for w in range(nwords):
            ctx.kw[w] = <uint64_t>(((<object>kmask) >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        full = ((<object>1) << nv) - 1  # Python shift: nv may exceed the C int width
        lmask_obj = full & ~(<object>kmask)
        for w in range(nwords):
            ctx.lw[w] = <uint64_t>((lmask_obj >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        order = sorted(range(nv), key=lambda u: ((<object>nbhd[u]).bit_count(), u))
        for v2 in range(nv):
            ctx.pack_order[v2] = order[v2]
        ctx.static_mkl = 0
        ctx.static_mlk = 0
        for v2 in range(nv):
            if _get_bit(ctx.kw, v2):
                c = _pop_and(ctx.nbhd + v2 * nwords, ctx.lw, nwords)
                if c > ctx.static_mlk:
                    ctx.static_mlk = c
            else:
                c = _pop_and(ctx.nbhd + v2 * nwords, ctx.kw, nwords)
                if c > ctx.static_mkl:
                    ctx.static_mkl = c
        for w in range(nwords):
            ctx.ustack[w] = ctx.kw[w] | ctx.lw[w]
        ctx.atom_stack[0] = <uint64_t>(<object>ground_full)
        ctx.atom_count[0] = 1

        r = _dfs(&ctx, memo, 0)
        if r == 1:
            witness = sorted(ctx.chosen[i] for i in range(ctx.found_len))
            return witness, int(ctx.nodes), True
        return None, int(ctx.nodes), not ctx.aborted
    finally:
        _free_ctx(&ctx)


cdef void _free_ctx(SearchCtx* ctx):
    PyMem_Free(ctx.nbhd)
    PyMem_Free(ctx.kw)
    PyMem_Free(ctx.lw)
    PyMem_Free(ctx.ground)
    PyMem_Free(ctx.pack_order)
    PyMem_Free(ctx.cand_idx)
    PyMem_Free(ctx.cand_cov)
    PyMem_Free(ctx.cand_drop)
    PyMem_Free(ctx.cand_mask)
    PyMem_Free(ctx.ustack)
    PyMem_Free(ctx.atom_stack)
    PyMem_Free(ctx.atom_count)
    PyMem_Free(ctx.sig_lo)
    PyMem_Free(ctx.sig_hi)
    PyMem_Free(ctx.scratch)
    PyMem_Free(ctx.chosen)
