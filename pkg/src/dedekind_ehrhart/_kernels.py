"""Hot inner loops, each in a numba and a pure-numpy flavour.

The active backend is picked once at import time from the environment
variable ``DEDEKIND_EHRHART_BACKEND`` (``numba`` or ``numpy``). Without the
variable numba is used when importable. Both implementations are always
reachable through :data:`BACKENDS` so that tests and benchmarks can compare
them directly.

All integer kernels work in int64; callers must stay inside the documented
bounds and fall back to Python integers otherwise.
"""
from __future__ import annotations

import math
import os
from types import SimpleNamespace

import numpy as np

from .numeric import COMPLEX_DTYPE, FLOAT_DTYPE

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

ENV_BACKEND = "DEDEKIND_EHRHART_BACKEND"

# Largest b for which the int64 sawtooth numerator sum cannot overflow:
# |terms| < b**2, b terms, so the sum stays below b**3 < 2**63.
SAWTOOTH_INT64_MAX_B = 1 << 20


# --------------------------------------------------------------------------
# loop-style reference implementations (compiled by numba when available)
# --------------------------------------------------------------------------

def _sawtooth_numerator_loop(a, b):
    # sum_{k=1}^{b-1} (2k - b) * (2 (k a mod b) - b); 0 <= a < b
    total = 0
    j = 0
    for k in range(1, b):
        j += a
        if j >= b:
            j -= b
        total += (2 * k - b) * (2 * j - b)
    return total


def _cot_table_loop(b):
    # cot(pi k / b) with the angle folded into (0, pi/2]: cot(pi - x) = -cot(x)
    table = np.zeros(b, dtype=np.float64)
    for k in range(1, b):
        if 2 * k <= b:
            table[k] = 1.0 / math.tan(math.pi * k / b)
        else:
            table[k] = -1.0 / math.tan(math.pi * (b - k) / b)
    return table


def _cot_product_sum_loop(table, a, b):
    # Kahan-compensated sum_{k=1}^{b-1} cot(pi k a / b) cot(pi k / b)
    total = 0.0
    comp = 0.0
    j = 0
    for k in range(1, b):
        j += a
        if j >= b:
            j -= b
        y = table[j] * table[k] - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def _dedekind_row_loop(b):
    # For every a in [1, b) coprime to b: the cotangent sum and the exact
    # sawtooth numerator. Terms k and b-k coincide (j -> b-j), so only
    # k < b/2 is summed and doubled; the k = b/2 term is zero in both sums.
    # Float terms go through naive blocks of 256 combined by Kahan.
    table = np.zeros(b, dtype=np.float64)
    for k in range(1, b):
        if 2 * k <= b:
            table[k] = 1.0 / math.tan(math.pi * k / b)
        else:
            table[k] = -1.0 / math.tan(math.pi * (b - k) / b)
    cot = np.zeros(b, dtype=np.float64)
    saw = np.zeros(b, dtype=np.int64)
    half = (b + 1) // 2  # k runs over 1 .. half-1
    for a in range(1, b):
        x = a
        y = b
        while y != 0:
            x, y = y, x % y
        if x != 1:
            continue
        total = 0.0
        comp = 0.0
        exact = 0
        j = 0
        k = 1
        while k < half:
            stop = min(k + 256, half)
            block = 0.0
            for kk in range(k, stop):
                j += a
                if j >= b:
                    j -= b
                block += table[j] * table[kk]
                exact += (2 * kk - b) * (2 * j - b)
            yv = block - comp
            t = total + yv
            comp = (t - total) - yv
            total = t
            k = stop
        cot[a] = 2.0 * total
        saw[a] = 2 * exact
    return cot, saw


def _count_simplex_loop(weights, cap):
    # #{x in Z^n_{>=0} : sum weights[i] * x[i] <= cap}; innermost axis counted by floor
    n = weights.shape[0]
    if cap < 0:
        return 0
    if n == 1:
        return cap // weights[0] + 1
    x = np.zeros(n - 1, dtype=np.int64)
    used = 0
    count = 0
    last = weights[n - 1]
    while True:
        count += (cap - used) // last + 1
        # odometer step over the first n-1 coordinates
        i = n - 2
        while i >= 0:
            if used + weights[i] <= cap:
                x[i] += 1
                used += weights[i]
                break
            used -= weights[i] * x[i]
            x[i] = 0
            i -= 1
        if i < 0:
            return count


def _count_polygon_loop(xs, ys):
    # bounding-box scan with a boundary-inclusive convex (CCW) containment test
    m = xs.shape[0]
    xmin = xs.min()
    xmax = xs.max()
    ymin = ys.min()
    ymax = ys.max()
    count = 0
    for px in range(xmin, xmax + 1):
        for py in range(ymin, ymax + 1):
            inside = True
            for i in range(m):
                j = i + 1
                if j == m:
                    j = 0
                ex = xs[j] - xs[i]
                ey = ys[j] - ys[i]
                if ex * (py - ys[i]) - ey * (px - xs[i]) < 0:
                    inside = False
                    break
            if inside:
                count += 1
    return count


def _theorem_sum_loop(moduli, singular, rs, K):
    """Sum over r in ``rs`` of prod_c (1 + coth(pi (s + i r) / c)).

    Every factor is held on orders -1..K (``singular[f]`` holds the pole
    expansion of factor f on that window); the product is exact on orders
    -q..K-q+1 for q factors, which is what gets returned.
    """
    q = moduli.shape[0]
    width = K + 2
    out_len = K + 2  # orders -q .. K-q+1
    acc_re = np.zeros(out_len, dtype=np.float64)
    acc_im = np.zeros(out_len, dtype=np.float64)
    comp_re = np.zeros(out_len, dtype=np.float64)
    comp_im = np.zeros(out_len, dtype=np.float64)
    prod = np.zeros(q * width, dtype=np.complex128)
    nxt = np.zeros(q * width, dtype=np.complex128)
    fac = np.zeros(width, dtype=np.complex128)
    y = np.zeros(K + 1, dtype=np.complex128)
    for idx in range(rs.shape[0]):
        r = rs[idx]
        # prod holds orders -f .. (for f factors so far), index 0 is order -f
        for i in range(q * width):
            prod[i] = 0.0
        prod[0] = 1.0
        plen = 1
        for f in range(q):
            c = moduli[f]
            rem = r % c
            if rem == 0:
                for i in range(width):
                    fac[i] = singular[f, i]
            else:
                # Taylor coefficients of coth about i*pi*rem/c via y' = 1 - y^2
                if 2 * rem <= c:
                    y[0] = -1j / math.tan(math.pi * rem / c)
                else:
                    y[0] = 1j / math.tan(math.pi * (c - rem) / c)
                for k in range(K):
                    s = 0.0 + 0.0j
                    for j in range(k + 1):
                        s += y[j] * y[k - j]
                    if k == 0:
                        y[k + 1] = (1.0 - s) / (k + 1)
                    else:
                        y[k + 1] = -s / (k + 1)
                step = math.pi / c
                scale = 1.0
                fac[0] = 0.0
                for k in range(K + 1):
                    fac[k + 1] = y[k] * scale
                    scale *= step
                fac[1] += 1.0
            # multiply: new series starts one order lower (-f-1)
            newlen = plen + width - 1
            for i in range(newlen):
                nxt[i] = 0.0
            for i in range(plen):
                pi_ = prod[i]
                if pi_ == 0:
                    continue
                for j in range(width):
                    nxt[i + j] += pi_ * fac[j]
            for i in range(newlen):
                prod[i] = nxt[i]
            plen = newlen
        for i in range(out_len):
            v = prod[i]
            yr = v.real - comp_re[i]
            t = acc_re[i] + yr
            comp_re[i] = (t - acc_re[i]) - yr
            acc_re[i] = t
            yi = v.imag - comp_im[i]
            t = acc_im[i] + yi
            comp_im[i] = (t - acc_im[i]) - yi
            acc_im[i] = t
    out = np.zeros(out_len, dtype=np.complex128)
    for i in range(out_len):
        out[i] = acc_re[i] + 1j * acc_im[i]
    return out


# --------------------------------------------------------------------------
# vectorised numpy implementations
# --------------------------------------------------------------------------

def _sawtooth_numerator_np(a, b):
    if b <= 1:
        return 0
    k = np.arange(1, b, dtype=np.int64)
    j = (k * a) % b
    return int(np.dot(2 * k - b, 2 * j - b))


def _cot_table_np(b):
    table = np.zeros(b, dtype=FLOAT_DTYPE)
    if b > 1:
        k = np.arange(1, b)
        folded = np.minimum(k, b - k).astype(FLOAT_DTYPE)
        table[1:] = np.where(2 * k <= b, 1.0, -1.0) / np.tan(np.pi * folded / b)
    return table


def _cot_product_sum_np(table, a, b):
    if b <= 1:
        return 0.0
    k = np.arange(1, b, dtype=np.int64)
    return math.fsum(table[(k * a) % b] * table[1:])


def _dedekind_row_np(b):
    table = _cot_table_np(b)
    cot = np.zeros(b, dtype=FLOAT_DTYPE)
    saw = np.zeros(b, dtype=np.int64)
    for a in range(1, b):
        if math.gcd(a, b) == 1:
            cot[a] = _cot_product_sum_np(table, a, b)
            saw[a] = _sawtooth_numerator_np(a, b)
    return cot, saw


def _count_simplex_np(weights, cap):
    if cap < 0:
        return 0
    weights = np.asarray(weights, dtype=np.int64)
    used = np.zeros(1, dtype=np.int64)
    for w in weights[:-1]:
        reps = (cap - used) // w + 1
        base = np.repeat(used, reps)
        # offset within each run: 0, 1, ..., reps-1
        starts = np.repeat(np.cumsum(reps) - reps, reps)
        used = base + w * (np.arange(base.size, dtype=np.int64) - starts)
    return int(np.sum((cap - used) // weights[-1] + 1))


def _count_polygon_np(xs, ys):
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    gx, gy = np.meshgrid(
        np.arange(xs.min(), xs.max() + 1, dtype=np.int64),
        np.arange(ys.min(), ys.max() + 1, dtype=np.int64),
        indexing="ij",
    )
    inside = np.ones(gx.shape, dtype=bool)
    ex = np.roll(xs, -1) - xs
    ey = np.roll(ys, -1) - ys
    for i in range(xs.size):
        inside &= ex[i] * (gy - ys[i]) - ey[i] * (gx - xs[i]) >= 0
    return int(inside.sum())


def _theorem_sum_np(moduli, singular, rs, K):
    q = len(moduli)
    width = K + 2
    rs = np.asarray(rs, dtype=np.int64)
    prod = np.zeros((rs.size, 1), dtype=COMPLEX_DTYPE)
    prod[:, 0] = 1.0
    for f, c in enumerate(moduli):
        c = int(c)
        rem = rs % c
        fac = np.zeros((rs.size, width), dtype=COMPLEX_DTYPE)
        pole = rem == 0
        fac[pole] = singular[f]
        reg = ~pole
        if reg.any():
            y = np.zeros((int(reg.sum()), K + 1), dtype=COMPLEX_DTYPE)
            rr = rem[reg]
            sign = np.where(2 * rr <= c, -1.0, 1.0)
            y[:, 0] = 1j * sign / np.tan(np.pi * np.minimum(rr, c - rr) / c)
            for k in range(K):
                s = np.einsum("ij,ij->i", y[:, : k + 1], y[:, k::-1])
                y[:, k + 1] = ((1.0 if k == 0 else 0.0) - s) / (k + 1)
            scale = (np.pi / c) ** np.arange(K + 1)
            reg_fac = np.zeros((y.shape[0], width), dtype=COMPLEX_DTYPE)
            reg_fac[:, 1:] = y * scale
            reg_fac[:, 1] += 1.0
            fac[reg] = reg_fac
        new = np.zeros((rs.size, prod.shape[1] + width - 1), dtype=COMPLEX_DTYPE)
        for j in range(width):
            new[:, j : j + prod.shape[1]] += prod * fac[:, j : j + 1]
        prod = new
    out_len = K + 2
    head = prod[:, :out_len]
    return np.array(
        [complex(math.fsum(head[:, i].real), math.fsum(head[:, i].imag)) for i in range(out_len)],
        dtype=COMPLEX_DTYPE,
    )


BACKENDS = {
    "numpy": SimpleNamespace(
        name="numpy",
        sawtooth_numerator=_sawtooth_numerator_np,
        cot_table=_cot_table_np,
        cot_product_sum=_cot_product_sum_np,
        dedekind_row=_dedekind_row_np,
        count_simplex=_count_simplex_np,
        count_polygon=_count_polygon_np,
        theorem_sum=_theorem_sum_np,
    ),
}

if HAVE_NUMBA:
    _jit = numba.njit(cache=True)
    _sawtooth_numerator_nb = _jit(_sawtooth_numerator_loop)
    _cot_table_nb = _jit(_cot_table_loop)
    _cot_product_sum_nb = _jit(_cot_product_sum_loop)
    _dedekind_row_nb = _jit(_dedekind_row_loop)
    _count_simplex_nb = _jit(_count_simplex_loop)
    _count_polygon_nb = _jit(_count_polygon_loop)
    _theorem_sum_nb = _jit(_theorem_sum_loop)

    BACKENDS["numba"] = SimpleNamespace(
        name="numba",
        sawtooth_numerator=lambda a, b: int(_sawtooth_numerator_nb(a, b)),
        cot_table=_cot_table_nb,
        cot_product_sum=lambda table, a, b: float(_cot_product_sum_nb(table, a, b)),
        dedekind_row=_dedekind_row_nb,
        count_simplex=lambda weights, cap: int(
            _count_simplex_nb(np.asarray(weights, dtype=np.int64), cap)
        ),
        count_polygon=lambda xs, ys: int(
            _count_polygon_nb(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64))
        ),
        theorem_sum=lambda moduli, singular, rs, K: _theorem_sum_nb(
            np.asarray(moduli, dtype=np.int64),
            np.asarray(singular, dtype=np.complex128),
            np.asarray(rs, dtype=np.int64),
            K,
        ),
    )


def _select() -> str:
    wanted = os.environ.get(ENV_BACKEND, "").strip().lower()
    if wanted:
        if wanted not in ("numba", "numpy"):
            raise ValueError(f"{ENV_BACKEND} must be 'numba' or 'numpy', got {wanted!r}")
        if wanted == "numba" and not HAVE_NUMBA:
            raise ImportError(f"{ENV_BACKEND}=numba but numba is not installed")
        return wanted
    return "numba" if HAVE_NUMBA else "numpy"


BACKEND = _select()


def active() -> SimpleNamespace:
    """Kernel namespace of the currently selected backend."""
    return BACKENDS[BACKEND]
