"""Ball-generated topologies on finite BL/DBL-algebras.

Admissible radii are the strongly-less-than-1 elements (BL side) or the
positive elements (DBL side).  Balls compare against the radius in the
strict lattice order (comparable and unequal); incomparable elements never
qualify.  A subset is open when every one of its points has a ball, for some
admissible radius, inside the subset.  Enumerating all subsets and checking
the topology axioms turns the topology theorems into executable statements;
continuity of the monoid and residuum maps is verified preimage by
preimage.

Subsets are represented internally as bitmasks over the carrier (and over
the squared carrier for product-space work).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import CarrierTooLarge, InadmissibleRadius, TheoremViolation
from .finite import FiniteAlgebra, Signature
from .reports import LawReport, Violation

DEFAULT_ENUMERATION_BOUND = 14


def _is_positive(alg: FiniteAlgebra, a: int) -> bool:
    # DBL side: meet(a, b) = 0 forces b = 0.
    return all(b == alg.bottom for b in alg.elements() if alg.meet(a, b) == alg.bottom)


def _is_strongly_less(alg: FiniteAlgebra, a: int) -> bool:
    # BL side: join(a, b) = 1 forces b = 1.
    return all(b == alg.top for b in alg.elements() if alg.join(a, b) == alg.top)


@lru_cache(maxsize=None)
def _admissible_indices(alg: FiniteAlgebra) -> tuple[int, ...]:
    test = _is_strongly_less if alg.signature is Signature.BL else _is_positive
    return tuple(a for a in alg.elements() if test(alg, a))


@dataclass(frozen=True)
class RadiusSet:
    """The admissible ball radii of an algebra, in carrier order."""

    algebra: FiniteAlgebra
    labels: tuple[str, ...]

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


def admissible_radii(alg: FiniteAlgebra) -> RadiusSet:
    """Strongly-less-than-1 elements (BL) or positive elements (DBL)."""
    return RadiusSet(alg, tuple(alg.labels[i] for i in _admissible_indices(alg)))


def _in_ball(alg: FiniteAlgebra, center: int, radius: int, b: int) -> bool:
    value = alg.bires(center, b)
    if alg.signature is Signature.BL:
        return alg.lt(radius, value)  # biresiduum > r
    return alg.lt(value, radius)  # distance < r


def _ball_mask(alg: FiniteAlgebra, center: int, radius: int) -> int:
    mask = 0
    for b in alg.elements():
        if _in_ball(alg, center, radius, b):
            mask |= 1 << b
    return mask


@lru_cache(maxsize=None)
def _ball_masks_by_center(alg: FiniteAlgebra) -> tuple[tuple[int, ...], ...]:
    radii = _admissible_indices(alg)
    return tuple(
        tuple(_ball_mask(alg, center, r) for r in radii) for center in alg.elements()
    )


def _check_radius(alg: FiniteAlgebra, radius: int) -> None:
    if radius not in _admissible_indices(alg):
        kind = "strongly-less-than-1" if alg.signature is Signature.BL else "positive"
        raise InadmissibleRadius(f"radius {alg.labels[radius]!r} is not {kind}")


def ball(alg: FiniteAlgebra, center: str, radius: str) -> frozenset[str]:
    """The ball around ``center`` of admissible radius ``radius``."""
    c, r = alg.index(center), alg.index(radius)
    _check_radius(alg, r)
    return frozenset(alg.labels[b] for b in alg.elements() if _in_ball(alg, c, r, b))


def _mask_of(alg: FiniteAlgebra, subset) -> int:
    mask = 0
    for label in subset:
        mask |= 1 << alg.index(label)
    return mask


def _labels_of(alg: FiniteAlgebra, mask: int) -> tuple[str, ...]:
    return tuple(alg.labels[i] for i in alg.elements() if mask >> i & 1)


def _mask_is_open(alg: FiniteAlgebra, mask: int) -> bool:
    balls = _ball_masks_by_center(alg)
    for a in alg.elements():
        if mask >> a & 1 and not any(bm & ~mask == 0 for bm in balls[a]):
            return False
    return True


def is_open(alg: FiniteAlgebra, subset) -> bool:
    """True iff every point of the subset has a ball inside it (empty set is
    vacuously open)."""
    return _mask_is_open(alg, _mask_of(alg, subset))


@dataclass(frozen=True)
class Topology:
    algebra: FiniteAlgebra
    masks: tuple[int, ...]

    @property
    def opens(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(_labels_of(self.algebra, m)) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, subset) -> bool:
        return _mask_of(self.algebra, subset) in set(self.masks)

    def export_lines(self) -> list[str]:
        """Line-oriented listing, smallest sets first, labels in carrier order."""
        return ["{" + ", ".join(_labels_of(self.algebra, m)) + "}" for m in self.masks]


def _verify_topology_axioms(alg: FiniteAlgebra, masks: tuple[int, ...]) -> None:
    full = (1 << alg.n) - 1
    family = set(masks)
    if 0 not in family or full not in family:
        raise TheoremViolation("open-set family misses the empty set or the carrier")
    if len(family) == 1 << alg.n:
        return  # the discrete powerset is trivially closed
    for m1, m2 in itertools.combinations_with_replacement(masks, 2):
        if m1 | m2 not in family:
            raise TheoremViolation(
                f"opens not closed under union: {_labels_of(alg, m1)} | {_labels_of(alg, m2)}"
            )
        if m1 & m2 not in family:
            raise TheoremViolation(
                f"opens not closed under intersection: {_labels_of(alg, m1)} & {_labels_of(alg, m2)}"
            )


def enumerate_topology(alg: FiniteAlgebra, bound: int = DEFAULT_ENUMERATION_BOUND) -> Topology:
    """Classify all 2^n subsets and verify the topology axioms on the result.

    Raises TheoremViolation if the family fails an axiom; for valid algebras
    this cannot happen (the executable form of the topology theorem).
    """
    if alg.n > bound:
        raise CarrierTooLarge(f"carrier size {alg.n} exceeds enumeration bound {bound}")
    masks = tuple(
        sorted(
            (m for m in range(1 << alg.n) if _mask_is_open(alg, m)),
            key=lambda m: (m.bit_count(), tuple(i for i in range(alg.n) if m >> i & 1)),
        )
    )
    _verify_topology_axioms(alg, masks)
    return Topology(alg, masks)


# -- product space -------------------------------------------------------------

def _pair_index(alg: FiniteAlgebra, i: int, j: int) -> int:
    return i * alg.n + j


@lru_cache(maxsize=None)
def _pair_ball_masks_by_center(alg: FiniteAlgebra) -> tuple[tuple[int, ...], ...]:
    radii = _admissible_indices(alg)
    n = alg.n
    bires = [[alg.bires(i, j) for j in range(n)] for i in range(n)]
    bl = alg.signature is Signature.BL
    out = []
    for a1, a2 in itertools.product(range(n), repeat=2):
        masks = []
        for r in radii:
            mask = 0
            for b1, b2 in itertools.product(range(n), repeat=2):
                value = alg.star(bires[a1][b1], bires[a2][b2])
                inside = alg.lt(r, value) if bl else alg.lt(value, r)
                if inside:
                    mask |= 1 << _pair_index(alg, b1, b2)
            masks.append(mask)
        out.append(tuple(masks))
    return tuple(out)


def product_ball(alg: FiniteAlgebra, center: tuple[str, str], radius: str) -> frozenset[tuple[str, str]]:
    """Ball in the squared carrier under the pair operator."""
    c1, c2 = alg.index(center[0]), alg.index(center[1])
    r = alg.index(radius)
    _check_radius(alg, r)
    radii = _admissible_indices(alg)
    mask = _pair_ball_masks_by_center(alg)[_pair_index(alg, c1, c2)][radii.index(r)]
    return frozenset(
        (alg.labels[i], alg.labels[j])
        for i, j in itertools.product(range(alg.n), repeat=2)
        if mask >> _pair_index(alg, i, j) & 1
    )


def _pair_mask_is_open(alg: FiniteAlgebra, mask: int) -> bool:
    balls = _pair_ball_masks_by_center(alg)
    for p in range(alg.n * alg.n):
        if mask >> p & 1 and not any(bm & ~mask == 0 for bm in balls[p]):
            return False
    return True


def product_is_open(alg: FiniteAlgebra, subset) -> bool:
    """Openness of a set of label pairs in the product topology."""
    mask = 0
    for a, b in subset:
        mask |= 1 << _pair_index(alg, alg.index(a), alg.index(b))
    return _pair_mask_is_open(alg, mask)


def verify_operation_continuity(
    alg: FiniteAlgebra, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[LawReport]:
    """For every open set, the preimages under the monoid and residuum maps
    (as maps from the squared carrier) must be product-open."""
    topo = enumerate_topology(alg, bound)
    n = alg.n
    reports = []
    for name, table in (("star-continuity", alg.monoid), ("arrow-continuity", alg.residuum)):
        report = LawReport(name)
        for open_mask in topo.masks:
            report.checked += 1
            pre = 0
            for i, j in itertools.product(range(n), repeat=2):
                if open_mask >> table[i][j] & 1:
                    pre |= 1 << _pair_index(alg, i, j)
            if not _pair_mask_is_open(alg, pre):
                witness = next(
                    (alg.labels[i], alg.labels[j])
                    for i, j in itertools.product(range(n), repeat=2)
                    if pre >> _pair_index(alg, i, j) & 1
                    and not any(
                        bm & ~pre == 0
                        for bm in _pair_ball_masks_by_center(alg)[_pair_index(alg, i, j)]
                    )
                )
                report.register(
                    Violation(
                        name,
                        ("{" + ", ".join(_labels_of(alg, open_mask)) + "}",),
                        f"preimage not open at {witness}",
                        "product-open",
                    )
                )
        reports.append(report)
    return reports


def check_radius_lemmas(alg: FiniteAlgebra) -> list[LawReport]:
    """G1..G4 on the DBL side, L1..L4 on the BL side, exhaustively."""
    bl = alg.signature is Signature.BL
    prefix = "L" if bl else "G"
    adm = set(_admissible_indices(alg))
    lbl = lambda i: alg.labels[i]
    extreme = alg.bottom if bl else alg.top

    first = LawReport(f"{prefix}1", checked=1)
    if extreme not in adm:
        first.register(Violation(f"{prefix}1", (lbl(extreme),), False, True))

    second = LawReport(f"{prefix}2")
    for a in alg.elements():
        if a not in adm:
            continue
        second.checked += 1
        strict = alg.lt(a, alg.top) if bl else alg.lt(alg.bottom, a)
        if not strict:
            second.register(Violation(f"{prefix}2", (lbl(a),), lbl(a), lbl(alg.top if bl else alg.bottom)))

    third = LawReport(f"{prefix}3")
    for a, b in itertools.product(alg.elements(), repeat=2):
        third.checked += 1
        if bl:
            # b < a << 1 implies b << 1
            if a in adm and alg.lt(b, a) and b not in adm:
                third.register(Violation(f"{prefix}3", (lbl(a), lbl(b)), False, True))
        else:
            # b > a >> 0 implies b >> 0
            if a in adm and alg.lt(a, b) and b not in adm:
                third.register(Violation(f"{prefix}3", (lbl(a), lbl(b)), False, True))

    fourth = LawReport(f"{prefix}4")
    for a, b in itertools.product(alg.elements(), repeat=2):
        if a not in adm or b not in adm:
            continue
        fourth.checked += 1
        combined = alg.join(a, b) if bl else alg.meet(a, b)
        if combined not in adm:
            fourth.register(Violation(f"{prefix}4", (lbl(a), lbl(b)), lbl(combined), "admissible"))

    return [first, second, third, fourth]
