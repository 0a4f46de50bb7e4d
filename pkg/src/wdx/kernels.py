"""Codeword-enumeration kernels.

Two interchangeable backends compute the Hamming-weight histogram of the row
space of a packed binary matrix:

* ``numba``: Gray-code walk, one row XOR and one popcount per codeword,
  parallel over partitions of the message space fixed by the high bits.
* ``numpy``: a table of all low-row combinations is XORed with each high-row
  combination and popcounted in bulk.

Set ``WDX_DISABLE_NUMBA=1`` to force the numpy path.  Both return identical
histograms regardless of the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

__all__ = [
    "BACKEND",
    "pack_rows",
    "unpack_rows",
    "weight_histogram",
    "span_table",
    "popcount_rows",
]

_DISABLE = os.environ.get("WDX_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLE:
        raise ImportError
    import numba
    from numba import njit, prange

    # probing an outdated system TBB emits a warning; results do not depend on the layer
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via env flag in a subprocess
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """(K, n) 0/1 array -> (K, W) uint64, bit j of a row in word j // 64."""
    bits = np.atleast_2d(np.asarray(bits, dtype=np.uint8))
    k, n = bits.shape
    w = max(1, (n + 63) // 64)
    padded = np.zeros((k, w * 64), dtype=np.uint8)
    padded[:, :n] = bits
    packed = np.packbits(padded.reshape(k, w, 64), axis=2, bitorder="little")
    return packed.view("<u8").reshape(k, w).astype(np.uint64)


def unpack_rows(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(np.atleast_2d(words), dtype="<u8")
    k = words.shape[0]
    bits = np.unpackbits(words.view(np.uint8).reshape(k, -1), axis=1, bitorder="little")
    return bits[:, :n]


def popcount_rows(words: np.ndarray) -> np.ndarray:
    """Row-wise popcount of a (N, W) uint64 array."""
    return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)


def span_table(rows: np.ndarray) -> np.ndarray:
    """All 2**K combinations of the rows; entry i is the XOR of rows at the set bits of i."""
    rows = np.asarray(rows, dtype=np.uint64)
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r])
    return table


def _numpy_histogram(rows: np.ndarray, n: int, threads: int) -> np.ndarray:
    k = rows.shape[0]
    nlow = min(k, 16)
    table = span_table(rows[:nlow])
    high = rows[nlow:]
    nhigh = high.shape[0]

    def chunk(lo: int, hi: int) -> np.ndarray:
        hist = np.zeros(n + 1, dtype=np.int64)
        # start of this range in Gray order, then one XOR per step
        g = lo ^ (lo >> 1)
        cw = np.zeros(rows.shape[1], dtype=np.uint64)
        for b in range(nhigh):
            if g >> b & 1:
                cw ^= high[b]
        for p in range(lo, hi):
            if p > lo:
                cw ^= high[(p & -p).bit_length() - 1]
            hist += np.bincount(popcount_rows(table ^ cw), minlength=n + 1)
        return hist

    total = 1 << nhigh
    parts = max(1, min(threads, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    if parts == 1:
        return chunk(0, total)
    with ThreadPoolExecutor(parts) as ex:
        return sum(ex.map(chunk, bounds[:-1], bounds[1:]))


if HAVE_NUMBA:

    @njit(cache=True, inline="always")
    def _popcount64(x):
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)

    @njit(cache=True)
    def _gray_block(rows, start, nlow, hist):
        w = rows.shape[1]
        cw = start.copy()
        c = 0
        for j in range(w):
            c += _popcount64(cw[j])
        hist[c] += 1
        for i in range(1, 1 << nlow):
            b = 0
            t = i
            while t & 1 == 0:
                t >>= 1
                b += 1
            c = 0
            for j in range(w):
                cw[j] ^= rows[b, j]
                c += _popcount64(cw[j])
            hist[c] += 1

    @njit(cache=True, parallel=True)
    def _gray_histogram(rows, n, nlow, nparts):
        k = rows.shape[0]
        w = rows.shape[1]
        hists = np.zeros((nparts, n + 1), dtype=np.int64)
        for p in prange(nparts):
            start = np.zeros(w, dtype=np.uint64)
            for b in range(k - nlow):
                if (p >> b) & 1:
                    for j in range(w):
                        start[j] ^= rows[nlow + b, j]
            _gray_block(rows, start, nlow, hists[p])
        return hists.sum(axis=0)


def weight_histogram(rows: np.ndarray, n: int, threads: int | None = None, backend: str | None = None) -> np.ndarray:
    """Histogram (length n+1, int64) of codeword weights over the row space.

    ``rows`` is (K, W) packed uint64.  Rows need not be independent; every
    message is counted once.
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    k = rows.shape[0]
    if threads is None:
        threads = os.cpu_count() or 1
    threads = max(1, int(threads))
    backend = backend or BACKEND
    if k == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    if backend == "numpy":
        return _numpy_histogram(rows, n, threads)
    if not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    # enough partitions to balance threads, never so many that blocks get tiny
    nhigh = min(max(0, k - 12), max(0, (4 * threads - 1).bit_length()))
    prev = numba.get_num_threads()
    numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    try:
        return _gray_histogram(rows, n, k - nhigh, 1 << nhigh)
    finally:
        numba.set_num_threads(prev)
