"""Derived-law catalogues for residuated structures, checked by brute force.

Two families of fifteen laws each: the B-laws hold in every BL-algebra
(monoid unit 1, residuum ->) and the D-laws are their order duals for
DBL-algebras (monoid unit 0, residuum reversed).  Laws are written against a
small context protocol so the same definitions run over unit-interval grids
and over finite table-driven algebras:

    ctx.elements()   deterministic iteration order (fixes witness order)
    ctx.star(a, b)   the monoid operation
    ctx.res(a, b)    the residuum
    ctx.meet / join  lattice inf / sup
    ctx.le(a, b)     the lattice order
    ctx.zero / one   bottom and top constants
    ctx.fmt(v)       element rendering for witnesses
"""

from __future__ import annotations

import itertools
from typing import Callable

from .reports import LawReport, Violation

# Each checker returns a list of (lhs, rhs, note) triples for failed clauses.


def _d1(ctx, a, b, c):
    out = []
    ab, ba = ctx.star(a, b), ctx.star(b, a)
    if ab != ba:
        out.append((ab, ba, "star not commutative"))
    lhs, rhs = ctx.star(ab, c), ctx.star(a, ctx.star(b, c))
    if lhs != rhs:
        out.append((lhs, rhs, "star not associative"))
    return out


def _d2(ctx, a):
    lhs = ctx.star(a, ctx.one)
    return [] if lhs == ctx.one else [(lhs, ctx.one, "a*1 != 1")]


def _d3(ctx, a, b):
    out = []
    lhs = ctx.star(a, ctx.res(a, b))
    if not ctx.le(b, lhs):
        out.append((lhs, b, "a*(a->b) < b"))
    rhs = ctx.res(b, ctx.star(a, b))
    if not ctx.le(rhs, a):
        out.append((a, rhs, "a < b->(a*b)"))
    return out


def _d4(ctx, a, b):
    left, right = ctx.le(b, a), ctx.res(a, b) == ctx.zero
    return [] if left == right else [(left, right, "a>=b iff a->b=0")]


def _d5(ctx, a, b, c):
    if not ctx.le(b, a):
        return []
    out = []
    if not ctx.le(ctx.star(b, c), ctx.star(a, c)):
        out.append((ctx.star(a, c), ctx.star(b, c), "star not monotone"))
    if not ctx.le(ctx.res(c, b), ctx.res(c, a)):
        out.append((ctx.res(c, a), ctx.res(c, b), "res not monotone in 2nd arg"))
    if not ctx.le(ctx.res(a, c), ctx.res(b, c)):
        out.append((ctx.res(a, c), ctx.res(b, c), "res not antitone in 1st arg"))
    return out


def _d6(ctx, a, b, c):
    lhs = ctx.star(ctx.meet(a, b), c)
    rhs = ctx.meet(ctx.star(a, c), ctx.star(b, c))
    return [] if lhs == rhs else [(lhs, rhs, "star does not distribute over inf")]


def _d7(ctx, a, b):
    out = []
    if not ctx.le(a, ctx.star(a, b)):
        out.append((ctx.star(a, b), a, "a*b < a"))
    if not ctx.le(ctx.res(b, a), a):
        out.append((a, ctx.res(b, a), "a < b->a"))
    return out


def _d8(ctx, a, b):
    lhs = ctx.meet(a, b)
    rhs = ctx.join(ctx.res(ctx.res(a, b), b), ctx.res(ctx.res(b, a), a))
    return [] if lhs == rhs else [(lhs, rhs, "inf identity fails")]


def _d9(ctx, a, b, c):
    lhs, rhs = ctx.res(a, b), ctx.res(ctx.res(b, c), ctx.res(a, c))
    return [] if ctx.le(rhs, lhs) else [(lhs, rhs, "(a->b) < ((b->c)->(a->c))")]


def _d10(ctx, a, b, c):
    lhs, rhs = ctx.star(ctx.res(a, b), ctx.res(b, c)), ctx.res(a, c)
    return [] if ctx.le(rhs, lhs) else [(lhs, rhs, "(a->b)*(b->c) < (a->c)")]


def _d11(ctx, a, b, c):
    lhs = ctx.res(a, ctx.res(b, c))
    rhs = ctx.res(ctx.star(a, b), c)
    return [] if lhs == rhs else [(lhs, rhs, "exchange fails")]


def _d12(ctx, a, b, c):
    lhs = ctx.res(a, ctx.res(b, c))
    rhs = ctx.res(b, ctx.res(a, c))
    return [] if lhs == rhs else [(lhs, rhs, "permutation fails")]


def _d13(ctx, a):
    lhs = ctx.res(a, a)
    return [] if lhs == ctx.zero else [(lhs, ctx.zero, "a->a != 0")]


def _d14(ctx, a, b, c):
    lhs, rhs = ctx.res(a, b), ctx.res(ctx.star(a, c), ctx.star(b, c))
    return [] if ctx.le(rhs, lhs) else [(lhs, rhs, "(a->b) < (a*c)->(b*c)")]


def _d15(ctx, a, b, c, d):
    lhs = ctx.star(ctx.res(a, b), ctx.res(c, d))
    rhs = ctx.res(ctx.star(a, c), ctx.star(b, d))
    return [] if ctx.le(rhs, lhs) else [(lhs, rhs, "(a->b)*(c->d) < (a*c)->(b*d)")]


def _b1(ctx, a, b, c):
    out = []
    ab, ba = ctx.star(a, b), ctx.star(b, a)
    if ab != ba:
        out.append((ab, ba, "star not commutative"))
    lhs, rhs = ctx.star(ab, c), ctx.star(a, ctx.star(b, c))
    if lhs != rhs:
        out.append((lhs, rhs, "star not associative"))
    return out


def _b2(ctx, a):
    lhs = ctx.star(a, ctx.zero)
    return [] if lhs == ctx.zero else [(lhs, ctx.zero, "a*0 != 0")]


def _b3(ctx, a, b):
    out = []
    lhs = ctx.star(a, ctx.res(a, b))
    if not ctx.le(lhs, b):
        out.append((lhs, b, "a*(a->b) > b"))
    rhs = ctx.res(b, ctx.star(a, b))
    if not ctx.le(a, rhs):
        out.append((a, rhs, "a > b->(a*b)"))
    return out


def _b4(ctx, a, b):
    left, right = ctx.le(a, b), ctx.res(a, b) == ctx.one
    return [] if left == right else [(left, right, "a<=b iff a->b=1")]


def _b5(ctx, a, b, c):
    if not ctx.le(a, b):
        return []
    out = []
    if not ctx.le(ctx.star(a, c), ctx.star(b, c)):
        out.append((ctx.star(a, c), ctx.star(b, c), "star not monotone"))
    if not ctx.le(ctx.res(c, a), ctx.res(c, b)):
        out.append((ctx.res(c, a), ctx.res(c, b), "res not monotone in 2nd arg"))
    if not ctx.le(ctx.res(b, c), ctx.res(a, c)):
        out.append((ctx.res(b, c), ctx.res(a, c), "res not antitone in 1st arg"))
    return out


def _b6(ctx, a, b, c):
    lhs = ctx.star(ctx.join(a, b), c)
    rhs = ctx.join(ctx.star(a, c), ctx.star(b, c))
    return [] if lhs == rhs else [(lhs, rhs, "star does not distribute over sup")]


def _b7(ctx, a, b):
    out = []
    if not ctx.le(ctx.star(a, b), a):
        out.append((ctx.star(a, b), a, "a*b > a"))
    if not ctx.le(a, ctx.res(b, a)):
        out.append((a, ctx.res(b, a), "a > b->a"))
    return out


def _b8(ctx, a, b):
    lhs = ctx.join(a, b)
    rhs = ctx.meet(ctx.res(ctx.res(a, b), b), ctx.res(ctx.res(b, a), a))
    return [] if lhs == rhs else [(lhs, rhs, "sup identity fails")]


def _b9(ctx, a, b, c):
    lhs, rhs = ctx.res(a, b), ctx.res(ctx.res(b, c), ctx.res(a, c))
    return [] if ctx.le(lhs, rhs) else [(lhs, rhs, "(a->b) > ((b->c)->(a->c))")]


def _b10(ctx, a, b, c):
    lhs, rhs = ctx.star(ctx.res(a, b), ctx.res(b, c)), ctx.res(a, c)
    return [] if ctx.le(lhs, rhs) else [(lhs, rhs, "(a->b)*(b->c) > (a->c)")]


def _b11(ctx, a, b, c):
    lhs = ctx.res(a, ctx.res(b, c))
    rhs = ctx.res(ctx.star(a, b), c)
    return [] if lhs == rhs else [(lhs, rhs, "exchange fails")]


def _b12(ctx, a, b, c):
    lhs = ctx.res(a, ctx.res(b, c))
    rhs = ctx.res(b, ctx.res(a, c))
    return [] if lhs == rhs else [(lhs, rhs, "permutation fails")]


def _b13(ctx, a):
    lhs = ctx.res(a, a)
    return [] if lhs == ctx.one else [(lhs, ctx.one, "a->a != 1")]


def _b14(ctx, a, b, c):
    lhs, rhs = ctx.res(a, b), ctx.res(ctx.star(a, c), ctx.star(b, c))
    return [] if ctx.le(lhs, rhs) else [(lhs, rhs, "(a->b) > (a*c)->(b*c)")]


def _b15(ctx, a, b, c, d):
    lhs = ctx.star(ctx.res(a, b), ctx.res(c, d))
    rhs = ctx.res(ctx.star(a, c), ctx.star(b, d))
    return [] if ctx.le(lhs, rhs) else [(lhs, rhs, "(a->b)*(c->d) > (a*c)->(b*d)")]


D_LAWS: list[tuple[str, int, Callable]] = [
    ("D1", 3, _d1),
    ("D2", 1, _d2),
    ("D3", 2, _d3),
    ("D4", 2, _d4),
    ("D5", 3, _d5),
    ("D6", 3, _d6),
    ("D7", 2, _d7),
    ("D8", 2, _d8),
    ("D9", 3, _d9),
    ("D10", 3, _d10),
    ("D11", 3, _d11),
    ("D12", 3, _d12),
    ("D13", 1, _d13),
    ("D14", 3, _d14),
    ("D15", 4, _d15),
]

B_LAWS: list[tuple[str, int, Callable]] = [
    ("B1", 3, _b1),
    ("B2", 1, _b2),
    ("B3", 2, _b3),
    ("B4", 2, _b4),
    ("B5", 3, _b5),
    ("B6", 3, _b6),
    ("B7", 2, _b7),
    ("B8", 2, _b8),
    ("B9", 3, _b9),
    ("B10", 3, _b10),
    ("B11", 3, _b11),
    ("B12", 3, _b12),
    ("B13", 1, _b13),
    ("B14", 3, _b14),
    ("B15", 4, _b15),
]


def run_law(ctx, law_id: str, arity: int, check: Callable) -> LawReport:
    """Exhaustive sweep of one law over all element tuples of its arity."""
    report = LawReport(law_id)
    elements = tuple(ctx.elements())
    for args in itertools.product(elements, repeat=arity):
        report.checked += 1
        for lhs, rhs, note in check(ctx, *args):
            report.register(
                Violation(law_id, tuple(ctx.fmt(a) for a in args), ctx.fmt(lhs), ctx.fmt(rhs), note)
            )
    return report


def run_catalogue(ctx, laws, ids=None) -> list[LawReport]:
    """Run a law catalogue, optionally restricted to a set of law ids."""
    wanted = None if ids is None else {i.upper() for i in ids}
    return [
        run_law(ctx, law_id, arity, check)
        for law_id, arity, check in laws
        if wanted is None or law_id in wanted
    ]
