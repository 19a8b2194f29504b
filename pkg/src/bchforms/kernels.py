"""Hot counting kernels behind the exhaustive oracles.

Each kernel exists twice: a numba ``@njit`` loop and a vectorized numpy
fallback with identical semantics.  The numba path is used when numba
imports cleanly; set ``BCHFORMS_NO_NUMBA=1`` to force the numpy path
(``benchmarks/bench_kernels.py`` compares the two).

Conventions shared by all kernels:

* GF(q) values are int64 in [0, q); ``pair`` is the flattened q*q addition
  table (``pair[a*q+b] = a+b`` in GF(q)) and ``neg`` the negation table.
* Codeword coordinates are indexed by the exponent t of x = alpha^t, so a
  linear term Tr(mu x) with mu = alpha^k is the trace vector shifted by k.
"""

from __future__ import annotations

import os

import numpy as np

_FORCED_OFF = os.environ.get("BCHFORMS_NO_NUMBA", "").strip() not in ("", "0")

if not _FORCED_OFF:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        HAVE_NUMBA = False
else:
    HAVE_NUMBA = False


def use_numba() -> bool:
    return HAVE_NUMBA


# ---------------------------------------------------------------------------
# value vector of one family member:
#   qvec[t] = sum_s trace_rows[s, (lam_logs[s] + t*steps[s]) mod n]
# summed in GF(q); lam_logs[s] = -1 marks a zero lambda.
# ---------------------------------------------------------------------------


def _eval_qvec_np(lam_logs, steps, trace_rows, q, out):
    n = out.shape[0]
    t = np.arange(n, dtype=np.int64)
    out[:] = 0
    qmul = np.int64(q)
    pair = None
    for s in range(lam_logs.shape[0]):
        l = lam_logs[s]
        if l < 0:
            continue
        idx = (l + t * steps[s]) % n
        contrib = trace_rows[s][idx]
        if pair is None:
            from .gfarith import small_field  # local import to keep numpy path light

            pair = small_field(q).add.astype(np.int64).ravel()
        out[:] = pair[out * qmul + contrib]


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _eval_qvec_nb(lam_logs, steps, trace_rows, pair, q, out):  # pragma: no cover - jitted
        n = out.shape[0]
        n_slots = lam_logs.shape[0]
        for t in range(n):
            out[t] = 0
        for s in range(n_slots):
            l = lam_logs[s]
            if l < 0:
                continue
            e = steps[s]
            pos = l
            row = trace_rows[s]
            for t in range(n):
                out[t] = pair[out[t] * q + row[pos]]
                pos += e
                if pos >= n:
                    pos -= n


def eval_qvec(lam_logs, steps, trace_rows, pair, q, out):
    """Fill out[t] = Q(alpha^t) for the member described by lam_logs."""
    if HAVE_NUMBA:
        _eval_qvec_nb(lam_logs, steps, trace_rows, pair, q, out)
    else:
        _eval_qvec_np(lam_logs, steps, trace_rows, q, out)


# ---------------------------------------------------------------------------
# weight histogram of one full PRM coset:
# words are (qvec[t] + trv[t+k] + eps)_t for mu = alpha^k, plus the q words
# with mu = 0.  counts[w] accumulates how many of the q^(m+1) words have
# Hamming weight w.
# ---------------------------------------------------------------------------


def _coset_weight_counts_np(qv, trv2, pair, neg, counts):
    n = qv.shape[0]
    q = neg.shape[0]
    qq = qv * np.int64(q)
    h0 = np.bincount(qv, minlength=q)
    for eps in range(q):
        counts[n - h0[neg[eps]]] += 1
    win = np.lib.stride_tricks.sliding_window_view(trv2, n)[:n]
    block = max(1, (1 << 22) // max(n, 1))
    for k0 in range(0, n, block):
        vals = pair[qq[None, :] + win[k0 : k0 + block]]
        for eps in range(q):
            zeros = np.count_nonzero(vals == neg[eps], axis=1)
            counts += np.bincount(n - zeros, minlength=counts.shape[0])


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _coset_weight_counts_nb(qv, trv2, pair, neg, counts):  # pragma: no cover - jitted
        n = qv.shape[0]
        q = neg.shape[0]
        qq = np.empty(n, dtype=np.int64)
        for j in range(n):
            qq[j] = qv[j] * q
        h0 = np.zeros(q, dtype=np.int64)
        for j in range(n):
            h0[qv[j]] += 1
        for eps in range(q):
            counts[n - h0[neg[eps]]] += 1
        # j-outer order keeps every access streaming
        h2d = np.zeros((n, q), dtype=np.int32)
        for j in range(n):
            a = qq[j]
            for k in range(n):
                h2d[k, pair[a + trv2[j + k]]] += 1
        for eps in range(q):
            v = neg[eps]
            for k in range(n):
                counts[n - h2d[k, v]] += 1


def coset_weight_counts(qv, trv2, pair, neg, counts):
    """Accumulate the weight histogram of the coset of Q into counts."""
    if HAVE_NUMBA:
        _coset_weight_counts_nb(qv, trv2, pair, neg, counts)
    else:
        _coset_weight_counts_np(qv, trv2, pair, neg, counts)


def coset_weight_table(qv, trv2, pair, neg):
    """Per-word weights of a coset: table[0, eps] is the mu = 0 word,
    table[1+k, eps] the mu = alpha^k word.  numpy-only (desk scale)."""
    n = qv.shape[0]
    q = neg.shape[0]
    qq = qv * np.int64(q)
    out = np.empty((n + 1, q), dtype=np.int64)
    h0 = np.bincount(qv, minlength=q)
    for eps in range(q):
        out[0, eps] = n - h0[neg[eps]]
    win = np.lib.stride_tricks.sliding_window_view(trv2, n)[:n]
    block = max(1, (1 << 22) // max(n, 1))
    for k0 in range(0, n, block):
        vals = pair[qq[None, :] + win[k0 : k0 + block]]
        for eps in range(q):
            zeros = np.count_nonzero(vals == neg[eps], axis=1)
            out[1 + k0 : 1 + k0 + len(zeros), eps] = n - zeros
    return out
