"""Shared fixtures data, random generators and brute-force oracles.

The oracles work on frozensets of ground labels and the strings "THETA" and
"EMPTY"; they never touch the library's bitmask arithmetic.
"""

import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from evidentia import EMPTY, THETA, GeneticCode, Regime, make_boe, new_frame
from evidentia.codon import ALL_CODONS, CELLS, toy_frame
from evidentia.core import _build

F = Fraction


# ---------------------------------------------------------------- worked example


def overlap_frame():
    return new_frame(
        ["c1", "c2", "c3", "c4", "c5", "c6"],
        {"A1": ["c1", "c2", "c3", "c4"], "A2": ["c4", "c5"]},
    )


def walkthrough_bodies(frame):
    a1, a2 = frame.possibility("A1"), frame.possibility("A2")
    t1 = make_boe(frame, [(a1, F(1, 3)), (a2, F(1, 3)), (THETA, F(1, 3))])
    t3_unamb = make_boe(frame, [(a2, 1)])
    t3_amb = make_boe(frame, [(THETA, 1)])
    return t1, t1, t3_unamb, t3_amb


# ---------------------------------------------------------------- random generation


def random_frame(rng, max_ground=6, max_poss=4, disjoint=False):
    n = rng.randint(1, max_ground)
    ground = [f"g{i}" for i in range(n)]
    if disjoint:
        return new_frame(ground, {f"P{i}": [g] for i, g in enumerate(ground)})
    poss = {}
    for i in range(rng.randint(1, max_poss)):
        members = [g for g in ground if rng.random() < 0.5] or [rng.choice(ground)]
        poss[f"P{i}"] = members
    return new_frame(ground, poss)


def random_body(rng, frame, max_focals=5, regime=Regime.CLOSED, theta=0.7, empty=0.5, as_float=False):
    full = frame.full_mask
    k = rng.randint(1, max_focals)
    raw = {}
    for _ in range(k):
        if rng.random() < 0.5 and frame.possibilities:
            f = rng.choice(frame.possibilities)[1]
        else:
            f = rng.randint(1, full)
        raw[f] = raw.get(f, 0) + rng.randint(1, 9)
    if rng.random() < theta:
        raw[THETA] = rng.randint(1, 9)
    if regime is Regime.OPEN_TBM and rng.random() < empty:
        raw[EMPTY] = rng.randint(1, 9)
    total = sum(raw.values())
    masses = {f: F(w, total) for f, w in raw.items()}
    if as_float:
        masses = {f: float(m) for f, m in masses.items()}
    return make_boe(frame, masses, regime)


def common_element_body(rng, frame, anchor_bit, max_focals=5):
    """Closed body whose subset focals all contain ``anchor_bit``; never conflicts with a peer."""
    full = frame.full_mask
    raw = {}
    for _ in range(rng.randint(1, max_focals)):
        f = rng.randint(0, full) | (1 << anchor_bit)
        raw[f] = raw.get(f, 0) + rng.randint(1, 9)
    if rng.random() < 0.5:
        raw[THETA] = rng.randint(1, 9)
    total = sum(raw.values())
    return make_boe(frame, {f: F(w, total) for f, w in raw.items()})


@st.composite
def frames(draw, max_ground=6, max_poss=4):
    n = draw(st.integers(1, max_ground))
    ground = [f"g{i}" for i in range(n)]
    k = draw(st.integers(1, max_poss))
    poss = {}
    for i in range(k):
        mask = draw(st.integers(1, (1 << n) - 1))
        poss[f"P{i}"] = [g for j, g in enumerate(ground) if mask >> j & 1]
    return new_frame(ground, poss)


@st.composite
def bodies_on(draw, frame, regime=Regime.CLOSED, max_focals=5):
    full = frame.full_mask
    raw = {}
    for mask in draw(st.lists(st.integers(1, full), min_size=1, max_size=max_focals)):
        raw[mask] = raw.get(mask, 0) + draw(st.integers(1, 9))
    if draw(st.booleans()):
        raw[THETA] = draw(st.integers(1, 9))
    if regime is Regime.OPEN_TBM and draw(st.booleans()):
        raw[EMPTY] = draw(st.integers(1, 9))
    total = sum(raw.values())
    return _build(frame, {f: F(w, total) for f, w in raw.items()}, regime)


@st.composite
def frame_with_bodies(draw, n=2, regime=Regime.CLOSED, max_ground=6):
    frame = draw(frames(max_ground=max_ground))
    return frame, [draw(bodies_on(frame, regime)) for _ in range(n)]


def random_code(rng):
    frame = toy_frame() if rng.random() < 0.3 else new_frame(
        ALL_CODONS,
        {f"P{i}": rng.sample(ALL_CODONS, rng.randint(1, 12)) for i in range(rng.randint(2, 4))},
    )
    ev = {}
    for cell in CELLS:
        raw = {}
        for _ in range(rng.randint(1, 3)):
            name = rng.choice(frame.names)
            raw[name] = raw.get(name, 0) + rng.randint(1, 5)
        if rng.random() < 0.6:
            raw[THETA] = rng.randint(1, 5)
        total = sum(raw.values())
        ev[cell] = make_boe(frame, {k: Fraction(v, total) for k, v in raw.items()})
    return GeneticCode(frame, ev, "random")


# ---------------------------------------------------------------- oracles


def as_sets(boe):
    """Body as {frozenset | 'THETA' | 'EMPTY': mass}."""
    out = {}
    for f, m in boe.masses.items():
        if f is THETA:
            key = "THETA"
        elif f is EMPTY:
            key = "EMPTY"
        else:
            key = frozenset(boe.frame.labels(f))
        out[key] = out.get(key, 0) + m
    return out


def oracle_meet(x, y):
    if x == "EMPTY" or y == "EMPTY":
        return "EMPTY"
    if x == "THETA":
        return y
    if y == "THETA":
        return x
    z = x & y
    return z if z else "EMPTY"


def oracle_combine(ma, mb, normalize):
    out = {}
    for x, vx in ma.items():
        for y, vy in mb.items():
            z = oracle_meet(x, y)
            out[z] = out.get(z, 0) + vx * vy
    if normalize:
        k = out.pop("EMPTY", 0)
        out = {z: v / (1 - k) for z, v in out.items()}
    return {z: v for z, v in out.items() if v != 0}


def oracle_conflict(ma, mb):
    return sum(
        (vx * vy for x, vx in ma.items() for y, vy in mb.items() if oracle_meet(x, y) == "EMPTY"),
        F(0),
    )


def oracle_bel(m, h):
    return sum((v for f, v in m.items() if isinstance(f, frozenset) and f <= h), F(0))


def oracle_pl(m, h):
    return sum((v for f, v in m.items() if f == "THETA" or (isinstance(f, frozenset) and f & h)), F(0))


def oracle_table(m, h, others):
    pl = sum((v for f, v in m.items() if isinstance(f, frozenset) and f <= h), F(0))
    bel = sum(
        (v for f, v in m.items() if isinstance(f, frozenset) and f <= h and not any(f <= o for o in others)),
        F(0),
    )
    return bel, pl


def oracle_entropy(pairs):
    """Closed-form generalized entropy from (bel, pl) pairs, in float arithmetic."""
    total = 0.0
    for bel, pl in pairs:
        p, gap = float(pl), float(pl) - float(bel)
        if p > 0:
            total -= p * math.log2(p) / math.exp(gap)
        total += gap
    return total


def seeded(seed):
    return random.Random(seed)
