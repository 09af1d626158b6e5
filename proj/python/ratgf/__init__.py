"""Exact solutions and rational generating functions of multidimensional
constant-coefficient difference equations.

Problems, generating functions and tables are plain dicts in the same JSON
schemas the ``ratgf`` command-line tool uses.
"""

import json

from . import _ratgf
from ._ratgf import RatgfError

__all__ = [
    "RatgfError",
    "genfunc",
    "solve",
    "green",
    "expand",
    "coeff_at",
    "ratfn_eq",
    "theorem1_series",
    "verify",
    "faces",
]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def genfunc(problem, zw=False):
    """Closed-form generating function of the solution (GF dict)."""
    return json.loads(_ratgf.genfunc(_dump(problem), zw))


def solve(problem, box):
    """Dynamic-programming solution on the box 0 <= x <= box."""
    return json.loads(_ratgf.solve(_dump(problem), list(box)))


def green(problem, tau, zw=False):
    return json.loads(_ratgf.green(_dump(problem), list(tau), zw))


def expand(gf, order):
    return json.loads(_ratgf.expand(_dump(gf), order))


def coeff_at(gf, x):
    """Coefficient f(x) of z^-(x+1) as a rational string."""
    return _ratgf.coeff_at(_dump(gf), list(x))


def ratfn_eq(f, g):
    return _ratgf.ratfn_eq(_dump(f), _dump(g))


def theorem1_series(problem, formula, order):
    return json.loads(_ratgf.theorem1_series(_dump(problem), formula, order))


def verify(problem, box):
    return json.loads(_ratgf.verify(_dump(problem), list(box)))


def faces(m):
    return [(list(flags), [list(p) for p in pts]) for flags, pts in _ratgf.faces(list(m))]
