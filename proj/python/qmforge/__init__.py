"""Exact arithmetic on counting quasimorphisms of free groups."""

import json as _json
from fractions import Fraction

from . import _core
from ._core import ContractError, ParseError, Sum, VerificationError, ball_size, parse, rot, suite_names

__all__ = [
    "ContractError", "ParseError", "Sum", "VerificationError",
    "act", "ball_size", "coefficients", "empirical_equiv", "evaluate",
    "exclude_fixpoint", "is_normal_form", "norm", "normal_form", "nrep",
    "parse", "reduce_word", "reduced_length", "rot", "speed", "suite_names",
    "sup_on_ball", "verify",
]


def _load(s):
    return _json.loads(s)


def coefficients(f):
    """Terms of f as {word: Fraction}."""
    return {w: Fraction(c) for w, c in f.terms()}


def evaluate(f, word, rank=2):
    return Fraction(_core.evaluate(f, word, rank))


def reduce_word(word, rank=2):
    return _core.reduce_word(word, rank)


def norm(f, rank=2):
    return _core.norm(f, rank)


def reduced_length(f, rank=2):
    return _load(_core.reduced_length(f, rank))


def normal_form(f, rank=2):
    """Returns (normal form, whether its trace replays to the input)."""
    return _core.normal_form(f, rank)


def is_normal_form(f, rank=2):
    return _load(_core.is_normal_form(f, rank))


def act(x, f, rank=2):
    return _core.act(x, f, rank)


def nrep(f, n, rank=2):
    return _core.nrep(f, n, rank)


def speed(f, rank=2):
    return _load(_core.speed(f, rank))


def exclude_fixpoint(f, rank=2):
    return _load(_core.exclude_fixpoint(f, rank))


def sup_on_ball(f, radius, rank=2):
    return _load(_core.sup_on_ball(f, radius, rank))


def empirical_equiv(f, g, radii=None, rank=2):
    return _load(_core.empirical_equiv(f, g, radii, rank))


def verify(suite, rank=2, radius=None):
    return _load(_core.verify(suite, rank, radius))
