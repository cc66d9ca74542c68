"""Pure-Python trust-history kernel.

Mirror of the optional compiled kernel in ``_histcore_c.pyx``; both must
produce bit-identical results. Operates on parallel arrays of satisfaction,
importance and timestamps kept by InteractionHistory.
"""
import math


def decay_weight(l, sh, t, t_i, mu, nu):
    """Decay factor of the l-th (1-based) of sh interactions at time t."""
    dt = abs(t - t_i)
    if dt > 0.0 and math.log(dt) > 1.0:
        return mu * (l / sh) + nu / math.log(dt)
    return mu * (l / sh) + nu


def windowed_opinion(sf, somega, ts, t, mu, nu, window):
    """Importance- and decay-weighted mean of sf over the last `window` records.

    `window` larger than the history size covers the whole history.
    """
    sh = len(sf)
    start = sh - window if window < sh else 0
    num = 0.0
    den = 0.0
    for k in range(start, sh):
        w = somega[k] * decay_weight(k + 1, sh, t, ts[k], mu, nu)
        num += sf[k] * w
        den += w
    return num / den


def opinion_stats(sf, somega, ts, t, mu, nu, l_lon, l_rec):
    """Competence belief plus long- and short-window opinions in one pass."""
    sh = len(sf)
    full_n = full_d = 0.0
    lon_n = lon_d = 0.0
    rec_n = rec_d = 0.0
    lon_start = sh - l_lon if l_lon < sh else 0
    rec_start = sh - l_rec if l_rec < sh else 0
    for k in range(sh):
        w = somega[k] * decay_weight(k + 1, sh, t, ts[k], mu, nu)
        x = sf[k] * w
        full_n += x
        full_d += w
        if k >= lon_start:
            lon_n += x
            lon_d += w
        if k >= rec_start:
            rec_n += x
            rec_d += w
    return full_n / full_d, lon_n / lon_d, rec_n / rec_d


def sort_integrity(sf, somega, ts, t, mu, nu, scb):
    """Comparison-mode integrity: rms deviation of weighted satisfaction
    terms from the competence belief."""
    sh = len(sf)
    acc = 0.0
    for k in range(sh):
        w = somega[k] * decay_weight(k + 1, sh, t, ts[k], mu, nu)
        d = sf[k] * w - scb
        acc += d * d
    return math.sqrt(acc / sh)
