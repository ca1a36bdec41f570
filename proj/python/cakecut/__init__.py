"""Exact cake-cutting protocols with envy-freeness analysis.

Profiles and results are plain dicts; every number that is a rational
travels as a "p/q" string.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DocumentError, ProtocolViolation, UnsupportedPlayerCount, dc_recurrence, dgef, protocols

__all__ = [
    "DocumentError",
    "ProtocolViolation",
    "UnsupportedPlayerCount",
    "dc_recurrence",
    "dgef",
    "protocols",
    "random_profile",
    "uniform_profile",
    "run",
    "run_cheating",
    "verify",
    "strategy",
    "fraction",
]


def _text(profile):
    return profile if isinstance(profile, str) else json.dumps(profile)


def fraction(text):
    """Parse a "p/q" string from a document."""
    return Fraction(text)


def random_profile(n, segments, seed):
    return json.loads(_core.random_profile(n, segments, seed))


def uniform_profile(n):
    return json.loads(_core.uniform_profile(n))


def run(protocol, profile, trace=False):
    return json.loads(_core.run(protocol, _text(profile), trace))


def run_cheating(protocol, profile, cheater, policy):
    """`cheater` is a 1-based player number, `policy` e.g. "interior:1/4@1"."""
    return json.loads(_core.run_cheating(protocol, _text(profile), cheater, policy))


def verify(protocol, n, trials, seed=1, workers=0):
    return json.loads(_core.verify(protocol, n, trials, seed, workers))


def strategy(protocol, n, trials, seed=1, workers=0):
    return json.loads(_core.strategy(protocol, n, trials, seed, workers))
