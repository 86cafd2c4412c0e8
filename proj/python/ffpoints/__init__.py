"""Explicit rational points on curves over F_p(t).

Thin wrappers over the compiled core: payloads cross the boundary as JSON
strings (the same schema the command-line tool reads and writes), and these
helpers hand back parsed dicts/lists.
"""

import json as _json

from . import _core

__version__ = "1.0.0"

ParameterError = _core.ParameterError
DivisibilityError = _core.DivisibilityError
BudgetExceeded = _core.BudgetExceeded
CapExceeded = _core.CapExceeded


def generate(family, p=5, r=3, n=1, f=None, negations=False, involutions=False):
    """Construct the explicit point set; returns the point-set report dict."""
    return _json.loads(
        _core.generate(family, p, r, n, f, negations, involutions))


def verify(points, mode="auto", eps_log2=-60, dense_cap=10**6, seed=1729,
           curve=None):
    """Verify points (a report dict, point list, or single point) on their curve."""
    pj = points if isinstance(points, str) else _json.dumps(points)
    cj = "" if curve is None else (
        curve if isinstance(curve, str) else _json.dumps(curve))
    return _json.loads(_core.verify(pj, mode, eps_log2, dense_cap, seed, cj))


def search(family, p, d, r=3, k=6, f=None, max_num_deg=0, max_den_deg=0,
           budget=10**8, threads=1):
    """Exhaustive search for rational points with low-degree x."""
    return _json.loads(
        _core.search(family, p, d, r, k, f, max_num_deg, max_den_deg, budget,
                     threads))


def table(p, r, ns):
    """Growth table rows (tau_odd, point counts, max x degree) for each n."""
    return _json.loads(_core.table(p, r, list(ns)))


def equal(lhs, rhs, p, mode="auto", eps_log2=-60, dense_cap=10**6, seed=1729):
    """Compare two factored expressions; returns the verification dict."""
    lj = lhs if isinstance(lhs, str) else _json.dumps(lhs)
    rj = rhs if isinstance(rhs, str) else _json.dumps(rhs)
    return _json.loads(_core.equal(lj, rj, p, mode, eps_log2, dense_cap, seed))


def canonicalize(expr, p):
    """Canonical form of a factored expression dict."""
    ej = expr if isinstance(expr, str) else _json.dumps(expr)
    return _json.loads(_core.canonicalize(ej, p))


def expr_str(expr, p):
    """Human-readable rendering of a factored expression dict."""
    ej = expr if isinstance(expr, str) else _json.dumps(expr)
    return _core.expr_str(ej, p)


def tau_odd(n):
    """Number of divisors m of n with n/m odd."""
    return _core.tau_odd(n)


def odd_quotient_divisors(n):
    return _core.odd_quotient_divisors(n)


def lte(p, ell, k):
    """(exact, predicted) valuation of ell in p^k + 1."""
    return _core.lte(p, ell, k)
