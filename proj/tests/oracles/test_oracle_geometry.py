"""Independent construction of W(q) from the symplectic form, Payne derivation and spectra."""

import itertools
import math

import numpy as np
import pytest


def projective_points(q):
    pts = []
    for v in itertools.product(range(q), repeat=4):
        if any(v):
            first = next(x for x in v if x)
            if first == 1:
                pts.append(v)
    return pts


def normalize(v, q):
    first = next(x for x in v if x % q)
    inv = pow(first, q - 2, q)
    return tuple((x * inv) % q for x in v)


def symplectic(u, v, q):
    return (u[0] * v[1] - u[1] * v[0] + u[2] * v[3] - u[3] * v[2]) % q


def wq(q):
    pts = projective_points(q)
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if symplectic(a, b, q):
            continue
        line = frozenset(
            index[normalize(tuple((x * a[k] + y * b[k]) % q for k in range(4)), q)]
            for x in range(q)
            for y in range(q)
            if x or y
        )
        lines.add(line)
    return len(pts), [sorted(l) for l in lines]


def check_gq(npts, lines, s, t):
    assert all(len(l) == s + 1 for l in lines)
    deg = [0] * npts
    for l in lines:
        for p in l:
            deg[p] += 1
    assert all(d == t + 1 for d in deg)
    assert npts == (1 + s) * (1 + s * t)


def derive(npts, lines, x):
    coll = [set() for _ in range(npts)]
    for l in lines:
        for p in l:
            coll[p].update(l)
    far = [p for p in range(npts) if p not in coll[x]]
    new_lines = [l for l in lines if x not in l]
    spans = set()
    for y in far:
        trace = coll[x] & coll[y]
        span = set(range(npts))
        for z in trace:
            span &= coll[z]
        spans.add(frozenset(span - {x}))
    idx = {p: i for i, p in enumerate(far)}
    out = [[idx[p] for p in l if p in idx] for l in new_lines] + [[idx[p] for p in sp] for sp in spans]
    return len(far), out


def lambda3(npts, lines):
    n = npts + len(lines)
    a = np.zeros((n, n))
    for j, l in enumerate(lines):
        for p in l:
            a[p, npts + j] = a[npts + j, p] = 1
    ev = sorted(np.linalg.eigvalsh(a), key=lambda v: (-abs(v), -v))
    return abs(ev[2])


@pytest.mark.parametrize("q", [3, 5])
def test_wq_counts_and_spectrum(q):
    npts, lines = wq(q)
    assert len(lines) == (1 + q) * (1 + q * q)
    check_gq(npts, lines, q, q)
    assert lambda3(npts, lines) == pytest.approx(math.sqrt(2 * q), rel=1e-9)


def test_payne_derivation_gq24():
    npts, lines = wq(3)
    dn, dl = derive(npts, lines, 0)
    assert dn == 27
    assert len(dl) == 45
    check_gq(dn, dl, 2, 4)
    assert lambda3(dn, dl) == pytest.approx(math.sqrt(6), rel=1e-9)


def test_benson_residue_and_l2_bound():
    s, t = 2, 4
    assert ((s + 1) * (t + 1)) % (s + t) == 3
    assert (1 + s * t) * (2 + math.sqrt(s + t)) == pytest.approx(9 * (2 + math.sqrt(6)))
