"""Brute-force reference computations, deliberately independent of the package."""

import math


def kth_largest(values, k):
    return sorted(values, reverse=True)[k - 1]


def median(values):
    return kth_largest(values, math.ceil(len(values) / 2))


def mad(values):
    med = median(values)
    return median([abs(v - med) for v in values])


def threshold(values, k_eff):
    return median(values) + k_eff * mad(values)


def outliers(values, theta):
    return {i for i, v in enumerate(values) if v > theta}


def gaps(values, k_eff):
    med = median(values)
    ad = [abs(v - med) for v in values]
    md = median(ad)
    theta = med + k_eff * md
    dt = [abs(theta - v) for v in values]
    dmed = [abs(med - v) for v in values]
    dmad = [abs(md - a) for a in ad]
    lo = min(dt)
    star = [max(lo, min(a, b, c)) for a, b, c in zip(dt, dmed, dmad)]
    return dt, dmed, dmad, star, lo


def member_predicates(values, k, rho, k_eff=None):
    """Direct evaluation of every condition of the hard-instance family."""
    k_eff = k if k_eff is None else k_eff
    n = len(values)
    m = math.ceil(n / 2)
    ys = sorted(values, reverse=True)
    med = ys[m - 1]
    ads = sorted((abs(v - med) for v in values), reverse=True)
    md = ads[m - 1]
    theta = med + k_eff * md
    ok = {"k": k >= 2}
    if n < m + 1 or m < 2:
        return False, theta
    ok["unique median"] = ys[m - 2] > ys[m - 1] > ys[m]
    ok["unique mad"] = ads[m - 2] > ads[m - 1] > ads[m]
    eta = 0.5 * min(ys[m - 1] - ys[m], ys[m - 2] - ys[m - 1], ads[m - 1] - ads[m], ads[m - 2] - ads[m - 1])
    ok["rho"] = rho < eta
    ok["below"] = sum(1 for v in values if rho / 2 < theta - v < rho) >= 2
    ok["above"] = sum(1 for v in values if rho / 2 < v - theta < rho) >= 2
    ok["band"] = not any(theta - rho / 2 <= v <= theta + rho / 2 for v in values)
    return all(ok.values()), theta


def find_members(count=20, seed=0, max_tries=200000):
    """Random constructive search for hard-family instances.

    Candidates are a normal cluster plus two arms just below and two just above
    a guessed threshold; the guess is refined by fixed-point iteration and only
    candidates that pass :func:`member_predicates` are kept.
    """
    import random

    rng = random.Random(seed)
    found = []
    for _ in range(max_tries):
        if len(found) >= count:
            break
        n_core = rng.choice([7, 9, 11, 13])
        core = sorted(rng.uniform(0, 1) for _ in range(n_core))
        k = rng.choice([2.0, 2.5, 3.0])
        rho = rng.uniform(0.005, 0.05)
        offsets = [-0.75 * rho, -0.6 * rho, 0.6 * rho, 0.8 * rho]
        theta = threshold(core, k)
        for _ in range(20):
            cand = core + [theta + o for o in offsets]
            new = threshold(cand, k)
            if new == theta:
                break
            theta = new
        cand = core + [theta + o for o in offsets]
        ok, _ = member_predicates(cand, k, rho)
        if ok:
            found.append((cand, k, rho))
    return found
