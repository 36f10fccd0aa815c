"""Affine tangle words, crossingless matchings and the annular arc algebra."""

import json

from . import _annarc
from ._annarc import Error, basis, eliminate_crossings, enumerate, rewrites, run_cli

__all__ = [
    "Error",
    "basis",
    "compose",
    "eliminate_crossings",
    "enumerate",
    "evaluate",
    "hom",
    "matching",
    "rewrites",
    "run_cli",
    "verify",
]


def matching(signs):
    return json.loads(_annarc.matching_json(signs))


def evaluate(word):
    return json.loads(_annarc.evaluate_json(word))


def hom(alpha, beta):
    return json.loads(_annarc.hom_json(alpha, beta))


def compose(alpha, beta, gamma, x, y, coaction="paper"):
    return json.loads(_annarc.compose_json(alpha, beta, gamma, x, y, coaction))


def verify(suite, n, coaction="paper"):
    return json.loads(_annarc.verify_json(suite, n, coaction))
