"""Explicit orbits of monomials under the restricted lower-triangular affine group.

Each variable x_i of the target is replaced by an affine form
``x_i + sum(b_ij x_j) + eps_i`` with j < i ranging over indices outside a
context monomial.  Forms are built directly as packed evaluation vectors,
so products are ANDs and sums are XORs; no polynomial algebra is needed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .codewords import EvaluationVector, evaluate
from .errors import ConsistencyError, InputError, ResourceLimitError
from .monomial import Monomial, alpha, divides, free_below, lambda_size

DEFAULT_ORBIT_LIMIT = 1 << 20

__all__ = [
    "orbit_size",
    "orbit_array",
    "enumerate_orbit",
    "minkowski_size",
    "minkowski_array",
    "minkowski_sum_orbits",
    "measured_alpha",
    "verify_disjointness",
    "orbit_report",
]


@lru_cache(maxsize=None)
def _basis(m: int) -> tuple[np.ndarray, np.ndarray]:
    xs = np.vstack([evaluate(Monomial.from_indices(m, [k])).to_words() for k in range(m)])
    ones = evaluate(Monomial.one(m)).to_words()
    return xs, ones


def _forms(m: int, i: int, context: Monomial) -> np.ndarray:
    """All affine forms x_i + sum b_j x_j + eps, j < i and j outside the context."""
    xs, ones = _basis(m)
    out = np.vstack([xs[i], xs[i] ^ ones])
    for j in range(i):
        if not context.mask >> j & 1:
            out = np.concatenate([out, out ^ xs[j]])
    return out


def orbit_size(f: Monomial, context: Monomial | None = None) -> int:
    """Number of restricted actions on f, 2**(deg + free variables)."""
    context = f if context is None else context
    return 1 << sum(1 + free_below(context, i) for i in f.indices)


def _unique(rows: np.ndarray) -> np.ndarray:
    return np.unique(rows, axis=0)


def orbit_array(f: Monomial, context: Monomial | None = None, limit: int = DEFAULT_ORBIT_LIMIT) -> np.ndarray:
    """Distinct evaluations of the orbit of f, packed (N, W)."""
    context = f if context is None else context
    if not divides(f, context):
        raise InputError(f"{f} must divide the context {context}")
    if orbit_size(f, context) > limit:
        raise ResourceLimitError(f"orbit of {f} has {orbit_size(f, context)} actions, limit {limit}")
    _, ones = _basis(f.m)
    acc = ones[None, :].copy()
    for i in f.indices:
        forms = _forms(f.m, i, context)
        acc = (acc[:, None, :] & forms[None, :, :]).reshape(-1, acc.shape[1])
    return _unique(acc)


def enumerate_orbit(f: Monomial, limit: int = DEFAULT_ORBIT_LIMIT) -> frozenset[EvaluationVector]:
    return frozenset(EvaluationVector.from_words(f.m, row) for row in orbit_array(f, limit=limit))


def minkowski_size(factors, h: Monomial | None = None) -> int:
    """Predicted |orbit(h) * sum orbit(f_i / h)| for pairwise-coprime degree-2 quotients."""
    factors = list(factors)
    m = factors[0].m
    h = Monomial.one(m) if h is None else h
    quotients = [f / h for f in factors]
    e = h.degree + lambda_size(h)
    for f, q in zip(factors, quotients):
        e += sum(1 + free_below(f, i) for i in q.indices)
    deg2 = [q for q in quotients if q.degree == 2]
    e -= sum(alpha(a, b) for a, b in combinations(deg2, 2))
    # a linear quotient only keeps the free variables outside the quadratic part
    for f, q in zip(factors, quotients):
        if q.degree == 1:
            used = Monomial(m, sum(p.mask for p in deg2))
            (i,) = q.indices
            e += free_below(Monomial(m, used.mask | q.mask), i) - free_below(f, i)
    return 1 << e


def minkowski_array(factors, h: Monomial | None = None, limit: int = DEFAULT_ORBIT_LIMIT) -> np.ndarray:
    factors = list(factors)
    if not factors:
        raise InputError("need at least one factor")
    m = factors[0].m
    h = Monomial.one(m) if h is None else h
    acc = None
    for f in factors:
        if not divides(h, f):
            raise InputError(f"{h} does not divide {f}")
        orb = orbit_array(f / h, context=f, limit=limit)
        if acc is None:
            acc = orb
            continue
        if acc.shape[0] * orb.shape[0] > limit:
            raise ResourceLimitError(f"Minkowski sum needs {acc.shape[0] * orb.shape[0]} sums, limit {limit}")
        acc = _unique((acc[:, None, :] ^ orb[None, :, :]).reshape(-1, acc.shape[1]))
    if h.degree:
        horb = orbit_array(h, limit=limit)
        if acc.shape[0] * horb.shape[0] > limit:
            raise ResourceLimitError("product with the common divisor orbit exceeds the limit")
        acc = _unique((acc[:, None, :] & horb[None, :, :]).reshape(-1, acc.shape[1]))
    return acc


def minkowski_sum_orbits(factors, h: Monomial | None = None, limit: int = DEFAULT_ORBIT_LIMIT) -> frozenset[EvaluationVector]:
    factors = list(factors)
    return frozenset(EvaluationVector.from_words(factors[0].m, row) for row in minkowski_array(factors, h, limit))


def measured_alpha(f: Monomial, g: Monomial) -> int:
    a = orbit_array(f).shape[0]
    b = orbit_array(g).shape[0]
    s = minkowski_array([f, g]).shape[0]
    q, rem = divmod(a * b, s)
    if rem or q & (q - 1):
        raise ConsistencyError(f"orbit product {a * b} over Minkowski size {s} is not a power of two")
    return q.bit_length() - 1


def verify_disjointness(tuples, limit: int = DEFAULT_ORBIT_LIMIT) -> bool:
    """True iff the Minkowski-sum sets of the tuples are pairwise disjoint."""
    arrays = [minkowski_array(t.factors, t.h, limit) for t in tuples]
    if not arrays:
        return True
    allrows = np.concatenate(arrays)
    return _unique(allrows).shape[0] == allrows.shape[0]


def orbit_report(f: Monomial, limit: int = DEFAULT_ORBIT_LIMIT) -> dict:
    formula = 1 << (f.degree + lambda_size(f))
    enumerated = orbit_array(f, limit=limit).shape[0]
    return {
        "monomial": list(f.indices),
        "formula": str(formula),
        "enumerated": str(enumerated),
        "match": formula == enumerated,
    }
