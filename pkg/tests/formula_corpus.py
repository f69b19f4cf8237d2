"""Fifty well-formed formulas exercising every precedence interaction."""

CORPUS = [
    # atoms and constants
    "p",
    "0",
    "1",
    "long_atom_name42",
    "(p)",
    # negation
    "!p",
    "!!p",
    "!!!q",
    "!0",
    "!(p & q)",
    # strong conjunction, left-associative
    "p & q",
    "p & q & r",
    "p & (q & r)",
    "!p & q",
    "p & !q",
    # meet and join, one tier below &
    "p ^ q",
    "p | q",
    "p ^ q ^ r",
    "p | q | r",
    "p ^ q | r",
    "p | q ^ r",
    "p ^ (q | r)",
    "(p | q) ^ r",
    "p & q ^ r",
    "p ^ q & r",
    "p & q | r & s",
    "!p | !q",
    "p | (q | r)",
    # implication, right-associative and loosest
    "p -> q",
    "p -> q -> r",
    "(p -> q) -> r",
    "p & q -> r",
    "p -> q & r",
    "p | q -> r ^ s",
    "!p -> !q",
    "p -> 0",
    "1 -> p",
    "(p -> q) | (q -> p)",
    "(p -> q) & (q -> r) -> (p -> r)",
    "p -> (q | r)",
    # equivalence, non-associative, same tier as ->
    "p <-> q",
    "p <-> q & r",
    "(p <-> q) -> r",
    "p -> (q <-> r)",
    "p -> q <-> r",
    "(p <-> q) | (q <-> p)",
    "!(p <-> q)",
    # deeper mixtures
    "((p & q) -> (r | s)) ^ (t -> 0)",
    "!(p -> q) & (q ^ 1)",
    "(p | q -> p & q) <-> (p <-> q)",
]

assert len(CORPUS) == 50
