"""Norm families on the unit interval and their residua.

The four classic families are implemented as exact closed forms over
rationals: Lukasiewicz, Goedel, product, and drastic.  Each family exists in
a t-norm and an s-norm flavour, dual to each other via
``S(x, y) = 1 - T(1 - x, 1 - y)``.

The drastic pair is supported as a bare norm only: it is not continuous, so
requesting its residuum raises :class:`DrasticNotResiduated`.

Note on the drastic s-norm: its standard definition returns 1 when both
arguments are nonzero (the value printed in some sources as 0 breaks
associativity and the duality identity, and is treated here as a typo).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import lcm

from .errors import DrasticNotResiduated
from .reports import LawReport, Violation
from .unitval import ONE, ZERO, GridSpec, UnitValue


class NormKind(Enum):
    LUKASIEWICZ = "lukasiewicz"
    GOEDEL = "goedel"
    PRODUCT = "product"
    DRASTIC = "drastic"


class NormSide(Enum):
    TNORM = "t"
    SNORM = "s"


@dataclass(frozen=True)
class NormFamily:
    kind: NormKind
    side: NormSide

    @classmethod
    def t_norm(cls, kind: NormKind) -> "NormFamily":
        return cls(kind, NormSide.TNORM)

    @classmethod
    def s_norm(cls, kind: NormKind) -> "NormFamily":
        return cls(kind, NormSide.SNORM)

    @classmethod
    def from_name(cls, name: str, side: NormSide) -> "NormFamily":
        try:
            return cls(NormKind(name.strip().lower()), side)
        except ValueError:
            valid = ", ".join(k.value for k in NormKind)
            raise ValueError(f"unknown norm family {name!r} (expected one of: {valid})") from None

    @property
    def is_residuated(self) -> bool:
        return self.kind is not NormKind.DRASTIC

    def describe(self) -> str:
        return f"{self.kind.value} {'t-norm' if self.side is NormSide.TNORM else 's-norm'}"


CONTINUOUS_KINDS = (NormKind.LUKASIEWICZ, NormKind.GOEDEL, NormKind.PRODUCT)


@lru_cache(maxsize=None)
def closed_form(f: NormFamily):
    """The norm as a plain uncached callable, for hot exhaustive sweeps."""
    k = f.kind
    if f.side is NormSide.TNORM:
        if k is NormKind.LUKASIEWICZ:
            return lambda x, y: x.sub_clamped(y.complement())
        if k is NormKind.GOEDEL:
            return min
        if k is NormKind.PRODUCT:
            return lambda x, y: UnitValue(x * y)
        return lambda x, y: min(x, y) if max(x, y) == 1 else ZERO
    if k is NormKind.LUKASIEWICZ:
        return lambda x, y: x.add_clamped(y)
    if k is NormKind.GOEDEL:
        return max
    if k is NormKind.PRODUCT:
        return lambda x, y: UnitValue(x + y - x * y)
    return lambda x, y: max(x, y) if min(x, y) == 0 else ONE


@lru_cache(maxsize=None)
def apply_norm(f: NormFamily, x: UnitValue, y: UnitValue) -> UnitValue:
    """Closed-form value of the norm; exact rational."""
    return closed_form(f)(x, y)


def dualize(f: NormFamily) -> NormFamily:
    """The dual family: same kind, opposite side."""
    other = NormSide.SNORM if f.side is NormSide.TNORM else NormSide.TNORM
    return NormFamily(f.kind, other)


def dual_check(f: NormFamily, x: UnitValue, y: UnitValue) -> bool:
    """Exact duality identity S(x, y) == 1 - T(1-x, 1-y) for f's kind."""
    s = NormFamily.s_norm(f.kind)
    t = NormFamily.t_norm(f.kind)
    return apply_norm(s, x, y) == apply_norm(t, x.complement(), y.complement()).complement()


@lru_cache(maxsize=None)
def residuum(f: NormFamily, x: UnitValue, y: UnitValue) -> UnitValue:
    """Residuum closed form.

    s-norm side: R(x, y) = min{c : S(c, x) >= y}; t-norm side the adjoint
    R(x, y) = max{c : T(c, x) <= y}.
    """
    if not f.is_residuated:
        raise DrasticNotResiduated("the drastic norms are not continuous; no residuum exists")
    k = f.kind
    if f.side is NormSide.SNORM:
        if x >= y:
            return ZERO
        if k is NormKind.LUKASIEWICZ:
            return UnitValue(y - x)
        if k is NormKind.GOEDEL:
            return y
        return UnitValue((y - x) / (1 - x))
    if x <= y:
        return ONE
    if k is NormKind.LUKASIEWICZ:
        return UnitValue(1 - x + y)
    if k is NormKind.GOEDEL:
        return y
    return UnitValue(y / x)


def _oracle_denominator(f: NormFamily, x: UnitValue, y: UnitValue, g: GridSpec) -> int:
    # Refine the grid so that the true residuum is guaranteed to lie on it;
    # for the product family the answer's denominator divides
    # den(y - x) * num(1 - x) on the s-side (den(x) * num(y) on the t-side).
    d = lcm(g.denominator, x.denominator, y.denominator)
    if f.kind is NormKind.PRODUCT:
        if f.side is NormSide.SNORM and x < y:
            d = lcm(d, (y - x).denominator * (1 - x).numerator)
        elif f.side is NormSide.TNORM and x > y:
            d = lcm(d, x.numerator * y.denominator)
    return d


def residuum_oracle(f: NormFamily, x: UnitValue, y: UnitValue, g: GridSpec) -> UnitValue:
    """Brute-force residuum: scan grid points in order, no closed forms.

    s-norm side: the least grid point c with S(c, x) >= y (ascending scan);
    t-norm side: the greatest grid point c with T(c, x) <= y (descending).
    The scan grid refines GridSpec by the input denominators so the exact
    answer is always representable.
    """
    if not f.is_residuated:
        raise DrasticNotResiduated("the drastic norms are not continuous; no residuum exists")
    denom = _oracle_denominator(f, x, y, g)
    if f.side is NormSide.SNORM:
        for k in range(denom + 1):
            c = UnitValue(k, denom)
            if apply_norm(f, c, x) >= y:
                return c
        raise AssertionError("unreachable: S(1, x) = 1 >= y")
    for k in range(denom, -1, -1):
        c = UnitValue(k, denom)
        if apply_norm(f, c, x) <= y:
            return c
    raise AssertionError("unreachable: T(0, x) = 0 <= y")


def adjointness_check(f: NormFamily, g: GridSpec) -> LawReport:
    """Residuation as a biconditional, exhaustively over grid triples.

    s-norm side: a >= R(b, c)  iff  S(a, b) >= c.
    t-norm side: a <= R(b, c)  iff  T(a, b) <= c.
    """
    if not f.is_residuated:
        raise DrasticNotResiduated("adjointness is undefined for the drastic family")
    pts = g.points()
    rng = range(len(pts))
    law = "DBL3-adjointness" if f.side is NormSide.SNORM else "BL3-adjointness"
    report = LawReport(law)
    res = [[residuum(f, pts[b], pts[c]) for c in rng] for b in rng]
    nrm = [[apply_norm(f, pts[a], pts[b]) for b in rng] for a in rng]
    snorm_side = f.side is NormSide.SNORM
    for a in rng:
        pa = pts[a]
        nrm_a = nrm[a]
        for b in rng:
            nab = nrm_a[b]
            res_b = res[b]
            for c in rng:
                report.checked += 1
                if snorm_side:
                    left, right = pa >= res_b[c], nab >= pts[c]
                else:
                    left, right = pa <= res_b[c], nab <= pts[c]
                if left != right:
                    report.register(
                        Violation(law, (pa, pts[b], pts[c]), left, right, "biconditional mismatch")
                    )
    return report


def oracle_agreement_check(f: NormFamily, g: GridSpec) -> LawReport:
    """Closed-form residuum against the scanning oracle on all grid pairs."""
    report = LawReport("residuum-oracle")
    for x, y in itertools.product(g.points(), repeat=2):
        report.checked += 1
        got, expected = residuum(f, x, y), residuum_oracle(f, x, y, g)
        if got != expected:
            report.register(Violation("residuum-oracle", (x, y), got, expected))
    return report


def norm_axioms_check(f: NormFamily, g: GridSpec) -> list[LawReport]:
    """Associativity, commutativity, monotonicity, and the boundary condition."""
    pts = g.points()
    m = len(pts)
    rng = range(m)

    # Intern values so the cubic associativity sweep runs on int-keyed
    # lookups; off-grid intermediates (product family) intern on demand.
    values: list[UnitValue] = list(pts)
    ids: dict = {v: i for i, v in enumerate(values)}

    def vid(v: UnitValue) -> int:
        i = ids.get(v)
        if i is None:
            i = len(values)
            ids[v] = i
            values.append(v)
        return i

    fn = closed_form(f)
    pair: dict = {}

    def norm2(i: int, j: int) -> int:
        key = (i, j)
        v = pair.get(key)
        if v is None:
            v = vid(fn(values[i], values[j]))
            pair[key] = v
        return v

    grid_tab = [[norm2(i, j) for j in rng] for i in rng]

    assoc = LawReport("associativity")
    for x, y, z in itertools.product(rng, repeat=3):
        assoc.checked += 1
        lhs, rhs = norm2(grid_tab[x][y], z), norm2(x, grid_tab[y][z])
        if lhs != rhs:
            assoc.register(
                Violation("associativity", (pts[x], pts[y], pts[z]), values[lhs], values[rhs])
            )
    comm = LawReport("commutativity")
    for x, y in itertools.product(rng, repeat=2):
        comm.checked += 1
        if grid_tab[x][y] != grid_tab[y][x]:
            comm.register(
                Violation("commutativity", (pts[x], pts[y]), values[grid_tab[x][y]], values[grid_tab[y][x]])
            )
    mono = LawReport("monotonicity")
    for x1, x2 in itertools.combinations_with_replacement(rng, 2):
        row_lo, row_hi = grid_tab[x1], grid_tab[x2]
        for y in rng:
            mono.checked += 1
            if values[row_lo[y]] > values[row_hi[y]]:
                mono.register(
                    Violation("monotonicity", (pts[x1], pts[x2], pts[y]), values[row_lo[y]], values[row_hi[y]])
                )
    unit_idx = ids[ONE if f.side is NormSide.TNORM else ZERO]
    boundary = LawReport("boundary")
    for x in rng:
        boundary.checked += 1
        got = grid_tab[unit_idx][x]
        if values[got] != pts[x]:
            boundary.register(Violation("boundary", (values[unit_idx], pts[x]), values[got], pts[x]))
    return [assoc, comm, mono, boundary]


def ordering_chain_check(side: NormSide, g: GridSpec) -> LawReport:
    """Pointwise ordering of the four families on all grid pairs.

    t-norms: drastic <= lukasiewicz <= product <= goedel;
    s-norms the reverse chain: goedel <= product <= lukasiewicz <= drastic.
    """
    if side is NormSide.TNORM:
        chain = [NormKind.DRASTIC, NormKind.LUKASIEWICZ, NormKind.PRODUCT, NormKind.GOEDEL]
    else:
        chain = [NormKind.GOEDEL, NormKind.PRODUCT, NormKind.LUKASIEWICZ, NormKind.DRASTIC]
    families = [NormFamily(k, side) for k in chain]
    report = LawReport("ordering-chain")
    for x, y in itertools.product(g.points(), repeat=2):
        values = [apply_norm(f, x, y) for f in families]
        for lo, hi, f_lo, f_hi in zip(values, values[1:], families, families[1:]):
            report.checked += 1
            if lo > hi:
                report.register(
                    Violation(
                        "ordering-chain",
                        (x, y),
                        lo,
                        hi,
                        f"{f_lo.kind.value} > {f_hi.kind.value}",
                    )
                )
    return report


def duality_check(kind: NormKind, g: GridSpec) -> LawReport:
    """Duality identity on all grid pairs for one family kind."""
    report = LawReport("duality")
    f = NormFamily.s_norm(kind)
    for x, y in itertools.product(g.points(), repeat=2):
        report.checked += 1
        if not dual_check(f, x, y):
            s = apply_norm(f, x, y)
            t = apply_norm(dualize(f), x.complement(), y.complement()).complement()
            report.register(Violation("duality", (x, y), s, t))
    return report
