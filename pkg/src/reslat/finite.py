"""Table-driven finite algebras in the BL and DBL signatures.

An algebra is given extensionally: element labels, an order relation, a
monoid table, and a residuum table.  Meets and joins are computed from the
order at construction time, and all structural invariants (partial order,
bounded lattice, table closure) are validated eagerly.  Law properties
(monoid axioms, residuation, the derived law suites) are checked separately
so that a structurally sound but law-breaking table still loads and can be
reported on.

Element labels are opaque strings; the order of the carrier list fixes the
index order used everywhere, including witness ordering.
"""

from __future__ import annotations

import itertools
import json
from enum import Enum
from pathlib import Path

from .errors import NotALattice, NotAPartialOrder, ParseError, TableOutOfRange
from .laws import B_LAWS, D_LAWS, run_catalogue
from .reports import LawReport, Violation


class Signature(Enum):
    BL = "BL"
    DBL = "DBL"


class FiniteAlgebra:
    def __init__(self, labels, leq, monoid, residuum, signature: Signature, bottom: int, top: int):
        self.labels = tuple(labels)
        self.n = len(self.labels)
        if self.n < 2:
            raise ParseError("carrier must have at least two elements")
        if len(set(self.labels)) != self.n:
            raise ParseError("carrier labels must be unique")
        self.leq = tuple(tuple(row) for row in leq)
        self.monoid = tuple(tuple(row) for row in monoid)
        self.residuum = tuple(tuple(row) for row in residuum)
        self.signature = signature
        self.bottom = bottom
        self.top = top
        self._index = {lbl: i for i, lbl in enumerate(self.labels)}
        self._validate_order()
        self._validate_tables()
        self._meet, self._join = self._compute_bounds()

    # -- structural validation -------------------------------------------

    def _validate_order(self):
        n, leq = self.n, self.leq
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ParseError("leq matrix must be n x n")
        for i in range(n):
            if not leq[i][i]:
                raise NotAPartialOrder(f"missing reflexive pair ({self.labels[i]}, {self.labels[i]})")
        for i, j in itertools.product(range(n), repeat=2):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotAPartialOrder(
                    f"antisymmetry fails: {self.labels[i]} <= {self.labels[j]} <= {self.labels[i]}"
                )
        for i, j, k in itertools.product(range(n), repeat=3):
            if leq[i][j] and leq[j][k] and not leq[i][k]:
                raise NotAPartialOrder(
                    f"transitivity fails at ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )
        for i in range(n):
            if not leq[self.bottom][i]:
                raise NotALattice(f"bottom {self.labels[self.bottom]} is not below {self.labels[i]}")
            if not leq[i][self.top]:
                raise NotALattice(f"top {self.labels[self.top]} is not above {self.labels[i]}")

    def _validate_tables(self):
        n = self.n
        for name, table in (("star", self.monoid), ("arrow", self.residuum)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ParseError(f"{name} table must be n x n")
            for row in table:
                for entry in row:
                    if not isinstance(entry, int) or not 0 <= entry < n:
                        raise TableOutOfRange(f"{name} table entry {entry!r} is not a carrier index")

    def _compute_bounds(self):
        n, leq = self.n, self.leq
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
            greatest = [m for m in lower if all(leq[k][m] for k in lower)]
            if len(greatest) != 1:
                raise NotALattice(f"no unique meet for ({self.labels[i]}, {self.labels[j]})")
            meet[i][j] = greatest[0]
            upper = [k for k in range(n) if leq[i][k] and leq[j][k]]
            least = [m for m in upper if all(leq[m][k] for k in upper)]
            if len(least) != 1:
                raise NotALattice(f"no unique join for ({self.labels[i]}, {self.labels[j]})")
            join[i][j] = least[0]
        return tuple(map(tuple, meet)), tuple(map(tuple, join))

    # -- element access ----------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ParseError(f"unknown element label {label!r}") from None

    def elements(self):
        return range(self.n)

    @property
    def unit(self) -> int:
        """Monoid unit: top in the BL signature, bottom in the DBL one."""
        return self.top if self.signature is Signature.BL else self.bottom

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def lt(self, i: int, j: int) -> bool:
        """Strict lattice order: comparable and unequal."""
        return i != j and self.leq[i][j]

    def star(self, i: int, j: int) -> int:
        return self.monoid[i][j]

    def arrow(self, i: int, j: int) -> int:
        return self.residuum[i][j]

    def meet(self, i: int, j: int) -> int:
        return self._meet[i][j]

    def join(self, i: int, j: int) -> int:
        return self._join[i][j]

    def bires(self, i: int, j: int) -> int:
        """(i -> j) * (j -> i): the biresiduum (BL) or induced distance (DBL)."""
        return self.star(self.arrow(i, j), self.arrow(j, i))

    def pair_bires(self, a: tuple[int, int], b: tuple[int, int]) -> int:
        return self.star(self.bires(a[0], b[0]), self.bires(a[1], b[1]))

    def _key(self):
        return (self.labels, self.leq, self.monoid, self.residuum, self.signature, self.bottom, self.top)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.signature.value}, n={self.n}, labels={list(self.labels)})"


# -- document I/O -----------------------------------------------------------

_REQUIRED = ("carrier", "leq", "star", "arrow", "bottom", "top", "signature")


def algebra_from_document(doc) -> FiniteAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a mapping")
    missing = [f for f in _REQUIRED if f not in doc]
    if missing:
        raise ParseError(f"missing fields: {', '.join(missing)}")
    carrier = doc["carrier"]
    if not isinstance(carrier, list) or not all(isinstance(x, str) for x in carrier):
        raise ParseError("carrier must be an array of strings")
    index = {lbl: i for i, lbl in enumerate(carrier)}
    if len(index) != len(carrier):
        raise ParseError("carrier labels must be unique")
    n = len(carrier)

    try:
        signature = Signature(doc["signature"])
    except ValueError:
        raise ParseError(f"signature must be 'BL' or 'DBL', got {doc['signature']!r}") from None

    def known(label, where):
        if label not in index:
            raise ParseError(f"unknown label {label!r} in {where}")
        return index[label]

    bottom = known(doc["bottom"], "bottom")
    top = known(doc["top"], "top")

    leq = [[i == j for j in range(n)] for i in range(n)]  # reflexive closure implied
    if not isinstance(doc["leq"], list):
        raise ParseError("leq must be an array of [a, b] pairs")
    for pair in doc["leq"]:
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"leq entry {pair!r} is not a pair")
        a, b = pair
        leq[known(a, "leq")][known(b, "leq")] = True

    def table(field):
        raw = doc[field]
        if not isinstance(raw, list) or len(raw) != n or any(
            not isinstance(row, list) or len(row) != n for row in raw
        ):
            raise ParseError(f"{field} table must be an n x n array")
        out = []
        for row in raw:
            idx_row = []
            for entry in row:
                if entry not in index:
                    raise TableOutOfRange(f"unknown label {entry!r} in {field} table")
                idx_row.append(index[entry])
            out.append(idx_row)
        return out

    return FiniteAlgebra(carrier, leq, table("star"), table("arrow"), signature, bottom, top)


def algebra_to_document(alg: FiniteAlgebra) -> dict:
    pairs = [
        [alg.labels[i], alg.labels[j]]
        for i, j in itertools.product(range(alg.n), repeat=2)
        if i != j and alg.leq[i][j]
    ]
    return {
        "signature": alg.signature.value,
        "carrier": list(alg.labels),
        "bottom": alg.labels[alg.bottom],
        "top": alg.labels[alg.top],
        "leq": pairs,
        "star": [[alg.labels[v] for v in row] for row in alg.monoid],
        "arrow": [[alg.labels[v] for v in row] for row in alg.residuum],
    }


def loads_algebra(text: str) -> FiniteAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid algebra document: {exc}") from None
    return algebra_from_document(doc)


def load_algebra(path) -> FiniteAlgebra:
    return loads_algebra(Path(path).read_text(encoding="utf-8"))


def dump_algebra(alg: FiniteAlgebra, path) -> None:
    Path(path).write_text(json.dumps(algebra_to_document(alg), indent=2) + "\n", encoding="utf-8")


# -- axiom and law checking ---------------------------------------------------

class _FiniteContext:
    def __init__(self, alg: FiniteAlgebra):
        self.alg = alg
        self.zero = alg.bottom
        self.one = alg.top

    def elements(self):
        return range(self.alg.n)

    def star(self, a, b):
        return self.alg.star(a, b)

    def res(self, a, b):
        return self.alg.arrow(a, b)

    def meet(self, a, b):
        return self.alg.meet(a, b)

    def join(self, a, b):
        return self.alg.join(a, b)

    def le(self, a, b):
        return self.alg.le(a, b)

    def fmt(self, v):
        if isinstance(v, bool):
            return str(v)
        if isinstance(v, int):
            return self.alg.labels[v]
        return str(v)


def check_axioms(alg: FiniteAlgebra) -> list[LawReport]:
    """The five signature axioms, exhaustively over the carrier."""
    bl = alg.signature is Signature.BL
    prefix = "BL" if bl else "DBL"
    lbl = lambda i: alg.labels[i]
    n = alg.n

    lattice = LawReport(f"{prefix}1")
    for i, j in itertools.product(range(n), repeat=2):
        lattice.checked += 1
        m, jn = alg.meet(i, j), alg.join(i, j)
        if not (alg.le(m, i) and alg.le(m, j) and alg.le(i, jn) and alg.le(j, jn)):
            lattice.register(Violation(f"{prefix}1", (lbl(i), lbl(j)), lbl(m), lbl(jn), "bounds fail"))
        if not (alg.le(alg.bottom, i) and alg.le(i, alg.top)):
            lattice.register(Violation(f"{prefix}1", (lbl(i),), lbl(alg.bottom), lbl(alg.top), "0/1 not extreme"))

    monoid = LawReport(f"{prefix}2")
    unit = alg.unit
    for i in range(n):
        monoid.checked += 1
        if alg.star(i, unit) != i:
            monoid.register(Violation(f"{prefix}2", (lbl(i),), lbl(alg.star(i, unit)), lbl(i), "unit fails"))
    for i, j in itertools.product(range(n), repeat=2):
        monoid.checked += 1
        if alg.star(i, j) != alg.star(j, i):
            monoid.register(
                Violation(f"{prefix}2", (lbl(i), lbl(j)), lbl(alg.star(i, j)), lbl(alg.star(j, i)), "not commutative")
            )
    for i, j, k in itertools.product(range(n), repeat=3):
        monoid.checked += 1
        lhs, rhs = alg.star(alg.star(i, j), k), alg.star(i, alg.star(j, k))
        if lhs != rhs:
            monoid.register(Violation(f"{prefix}2", (lbl(i), lbl(j), lbl(k)), lbl(lhs), lbl(rhs), "not associative"))

    adjunction = LawReport(f"{prefix}3")
    for a, b, c in itertools.product(range(n), repeat=3):
        adjunction.checked += 1
        if bl:
            left, right = alg.le(c, alg.arrow(a, b)), alg.le(alg.star(c, a), b)
        else:
            left, right = alg.le(alg.arrow(b, c), a), alg.le(c, alg.star(a, b))
        if left != right:
            adjunction.register(
                Violation(f"{prefix}3", (lbl(a), lbl(b), lbl(c)), left, right, "residuation biconditional fails")
            )

    divisibility = LawReport(f"{prefix}4")
    for a, b in itertools.product(range(n), repeat=2):
        divisibility.checked += 1
        lhs = alg.meet(a, b) if bl else alg.join(a, b)
        rhs = alg.star(a, alg.arrow(a, b))
        if lhs != rhs:
            divisibility.register(Violation(f"{prefix}4", (lbl(a), lbl(b)), lbl(lhs), lbl(rhs)))

    prelinearity = LawReport(f"{prefix}5")
    target = alg.top if bl else alg.bottom
    for a, b in itertools.product(range(n), repeat=2):
        prelinearity.checked += 1
        combine = alg.join if bl else alg.meet
        got = combine(alg.arrow(a, b), alg.arrow(b, a))
        if got != target:
            prelinearity.register(Violation(f"{prefix}5", (lbl(a), lbl(b)), lbl(got), lbl(target)))

    return [lattice, monoid, adjunction, divisibility, prelinearity]


def check_derived_laws(alg: FiniteAlgebra, ids=None) -> list[LawReport]:
    """B1..B15 (BL signature) or D1..D15 (DBL signature), exhaustively.

    The arity-4 laws sweep n^4 tuples; carriers up to n = 24 stay practical.
    """
    catalogue = B_LAWS if alg.signature is Signature.BL else D_LAWS
    return run_catalogue(_FiniteContext(alg), catalogue, ids)


def dualize_algebra(alg: FiniteAlgebra) -> FiniteAlgebra:
    """Order-dual relabelling: reverse the order, swap bottom/top, keep the
    monoid and residuum tables verbatim, toggle the signature.

    The constructor revalidates the result structurally; that a BL-algebra
    dualizes to a DBL-algebra (and back) is checked by the test suite via
    check_axioms rather than assumed.
    """
    reversed_leq = tuple(tuple(alg.leq[j][i] for j in range(alg.n)) for i in range(alg.n))
    toggled = Signature.DBL if alg.signature is Signature.BL else Signature.BL
    return FiniteAlgebra(
        alg.labels, reversed_leq, alg.monoid, alg.residuum, toggled, alg.top, alg.bottom
    )


def biresiduum(alg: FiniteAlgebra, a: str, b: str) -> str:
    """Label-level biresiduum: (a -> b) * (b -> a)."""
    return alg.labels[alg.bires(alg.index(a), alg.index(b))]


def pair_biresiduum(alg: FiniteAlgebra, a: tuple[str, str], b: tuple[str, str]) -> str:
    """Label-level pair operator: (a1 <-> b1) * (a2 <-> b2)."""
    ai = (alg.index(a[0]), alg.index(a[1]))
    bi = (alg.index(b[0]), alg.index(b[1]))
    return alg.labels[alg.pair_bires(ai, bi)]
