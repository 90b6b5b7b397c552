"""Shared generators for tests: random valid extension assignments."""

from __future__ import annotations

import random
from fractions import Fraction

from ckcohomology.algebra import OmegaSequence
from ckcohomology.classify import (
    BasicCoefficient,
    ExtensionAssignment,
    Kind,
    alpha_f,
    alpha_l,
    constraint_check,
    enumerate_basic,
)


def random_rational(rng: random.Random, zero_weight: float = 0.0, bound: int = 5) -> Fraction:
    if rng.random() < zero_weight:
        return Fraction(0)
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        if x:
            return x


def random_sequence(rng: random.Random, n: int, zero_weight: float = 0.4) -> OmegaSequence:
    return OmegaSequence(tuple(random_rational(rng, zero_weight) for _ in range(n)))


def beta_allowed(seq: OmegaSequence, c: BasicCoefficient) -> bool:
    return not constraint_check(seq, ExtensionAssignment({c: 1}))


def random_valid_assignment(seq: OmegaSequence, rng: random.Random, include_tau: bool = True) -> ExtensionAssignment:
    """Random values on every free basic coefficient, type II pairs tied by their constraint."""
    n = seq.n
    values = {}
    for c in enumerate_basic(n, include_tau=include_tau):
        if c.kind is Kind.TAU:
            values[c] = random_rational(rng, 0.2)
        elif c.kind is Kind.BETA and beta_allowed(seq, c):
            values[c] = random_rational(rng, 0.2)
    for p in range(n):
        f = alpha_f(p) if p >= 1 else None
        l = alpha_l(p) if p + 2 <= n else None
        if f and l:
            wf, wl = seq[p], seq[p + 2]
            if wf:
                values[f] = random_rational(rng, 0.2)
                values[l] = wl * values[f] / wf
            elif wl:
                values[l] = random_rational(rng, 0.2)
            else:
                values[f] = random_rational(rng, 0.2)
                values[l] = random_rational(rng, 0.2)
        elif f or l:
            values[f or l] = random_rational(rng, 0.2)
    return ExtensionAssignment(values)


def completed_unit(seq: OmegaSequence, c: BasicCoefficient) -> ExtensionAssignment | None:
    """Smallest valid assignment with ``c = 1``; None when the constraints force ``c = 0``."""
    values = {c: Fraction(1)}
    if c.kind is Kind.ALPHA_F and c.i + 2 <= seq.n:
        wf, wl = seq[c.i], seq[c.i + 2]
        if wl:
            if not wf:
                return None
            values[alpha_l(c.i)] = wl / wf
    elif c.kind is Kind.ALPHA_L and c.i >= 1:
        wf, wl = seq[c.i], seq[c.i + 2]
        if wf:
            if not wl:
                return None
            values[alpha_f(c.i)] = wf / wl
    assign = ExtensionAssignment(values)
    return None if constraint_check(seq, assign) else assign
