"""Pure numpy twin of :mod:`varreg._ckernels`.

The compiled kernel walks panels depth first, one integrand at a time; here
every live panel of every batch item is evaluated in one vectorized round.
Acceptance is decided per panel, so both produce the same panel sets.
"""
from __future__ import annotations

import numpy as np

from ._gk import EPS, MIN_WIDTH, NODES, ROUNDOFF_FACTOR, WG, WK


def adapt_batch(fn, starts, ends, tol, max_panels: int):
    """Adaptive G10/K21 integration of ``fn`` along many straight segments.

    ``fn(items, zeta)`` receives the batch index of every row of ``zeta``
    (shape ``(m, 21)``) and must return integrand values of the same shape.
    ``tol`` may be a scalar or one tolerance per segment.  Returns
    ``(values, errors, panels, status)`` like the compiled kernels.
    """
    starts = np.asarray(starts, dtype=complex).ravel()
    ends = np.asarray(ends, dtype=complex).ravel()
    n = starts.size
    length = ends - starts
    tols = np.broadcast_to(np.asarray(tol, dtype=float), (n,))
    panels = np.zeros(n, dtype=np.int32)
    status = np.zeros(n, dtype=np.int32)

    item = np.arange(n)
    s0 = np.zeros(n)
    s1 = np.ones(n)
    acc_item, acc_s0, acc_val, acc_err = [], [], [], []
    while item.size:
        h = 0.5 * (s1 - s0)
        c = 0.5 * (s1 + s0)
        lv = length[item]
        zeta = starts[item, None] + (c[:, None] + h[:, None] * NODES) * lv[:, None]
        f = fn(item, zeta)
        kr = (f @ WK) * h * lv
        gr = (f @ WG) * h * lv
        absk = (np.abs(f) @ WK) * h * np.abs(lv)
        err = np.abs(kr - gr)
        np.add.at(panels, item, 1)

        width = s1 - s0
        ok = (err <= tols[item] * width) | (err <= ROUNDOFF_FACTOR * EPS * absk)
        bad = ~ok
        fail = bad & ((width < MIN_WIDTH) | (panels[item] >= max_panels))
        status[item[fail]] = 1
        keep = ok | fail
        acc_item.append(item[keep])
        acc_s0.append(s0[keep])
        acc_val.append(kr[keep])
        acc_err.append(err[keep])

        split = bad & ~fail & (status[item] == 0)
        item = np.repeat(item[split], 2)
        mid = c[split]
        s0 = np.column_stack([s0[split], mid]).ravel()
        s1 = np.column_stack([mid, s1[split]]).ravel()

    values = np.zeros(n, dtype=complex)
    errors = np.zeros(n)
    if acc_item:
        it = np.concatenate(acc_item)
        order = np.lexsort((np.concatenate(acc_s0), it))
        np.add.at(values, it[order], np.concatenate(acc_val)[order])
        np.add.at(errors, it[order], np.concatenate(acc_err)[order])
    return values, errors, panels, status


def extremal_batch(a, lam: complex, z0: complex, tol: float, max_panels: int):
    a = np.asarray(a, dtype=complex).ravel()
    lamc = np.conj(lam)

    def fn(items, zeta):
        av = a[items, None]
        num = (lam - 1) + (1 - lamc) * av * zeta
        den = (1 - zeta) * (1 + (lamc * av - lam) * zeta - av * zeta * zeta)
        return num / den

    n = a.size
    return adapt_batch(fn, np.zeros(n), np.full(n, z0), tol, max_panels)


def member_batch(zeros, counts, rotations, lam: complex, z0: complex,
                 tol: float, max_panels: int):
    rot = np.asarray(rotations, dtype=complex).ravel()
    n = rot.size
    zeros = np.asarray(zeros, dtype=complex).reshape(n, -1)
    counts = np.asarray(counts).ravel()
    if counts.size != n:
        raise ValueError("zeros, counts and rotations must agree in length")
    lamc = np.conj(lam)

    def fn(items, zeta):
        psi = rot[items, None] * zeta
        for k in range(zeros.shape[1]):
            alpha = zeros[items, k][:, None]
            active = (counts[items] > k)[:, None]
            factor = (zeta - alpha) / (1 - np.conj(alpha) * zeta)
            psi = np.where(active, psi * factor, psi)
        d = (psi + lam) / (1 + lamc * psi)
        return (d - 1) / ((1 - d * zeta) * (1 - zeta))

    return adapt_batch(fn, np.zeros(n), np.full(n, z0), tol, max_panels)
