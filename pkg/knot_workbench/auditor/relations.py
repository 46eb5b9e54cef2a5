"""
The 32 move-restricted equivalence relations, numbered in the order of the classification
proof, and their grouping into contracting sets and the 20 distinct non-trivial relations.
"""

from dataclasses import dataclass

from ..moves.moves import MoveSet, MoveType

RI, SRII, WRII, SRIII, WRIII = (
    MoveType.RI,
    MoveType.SRII,
    MoveType.WRII,
    MoveType.SRIII,
    MoveType.WRIII,
)

CASES: dict[int, MoveSet] = {
    1: MoveSet.of(),
    2: MoveSet.of(RI, SRII, WRII, SRIII, WRIII),
    3: MoveSet.of(RI, SRII, WRII, SRIII),
    4: MoveSet.of(RI, SRII, WRII, WRIII),
    5: MoveSet.of(RI, SRII, SRIII, WRIII),
    6: MoveSet.of(RI, WRII, SRIII, WRIII),
    7: MoveSet.of(RI, SRII, SRIII),
    8: MoveSet.of(RI, SRII, WRIII),
    9: MoveSet.of(RI, WRII, SRIII),
    10: MoveSet.of(SRII, WRII, WRIII),
    11: MoveSet.of(SRII, WRII, SRIII, WRIII),
    12: MoveSet.of(SRII, WRII, SRIII),
    13: MoveSet.of(SRII, SRIII),
    14: MoveSet.of(SRII, SRIII, WRIII),
    15: MoveSet.of(SRII, WRIII),
    16: MoveSet.of(WRII, SRIII),
    17: MoveSet.of(WRII, SRIII, WRIII),
    18: MoveSet.of(SRII),
    19: MoveSet.of(WRII),
    20: MoveSet.of(SRII, WRII),
    21: MoveSet.of(WRII, WRIII),
    22: MoveSet.of(SRIII, WRIII),
    23: MoveSet.of(SRIII),
    24: MoveSet.of(WRIII),
    25: MoveSet.of(RI),
    26: MoveSet.of(RI, SRII),
    27: MoveSet.of(RI, WRII),
    28: MoveSet.of(RI, SRII, WRII),
    29: MoveSet.of(RI, SRIII),
    30: MoveSet.of(RI, WRIII),
    31: MoveSet.of(RI, SRIII, WRIII),
    32: MoveSet.of(RI, WRII, WRIII),
}

CONTRACTING = (2, 3, 4, 5, 6, 7, 8, 9)
# Sets generating the same relation, with the member kept in the classification first
EQUIVALENT_CASES = ((11, 10, 12), (14, 13, 15))
NON_RI_GROUP = (11, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24)
RI_GROUP = (25, 26, 27, 28, 29, 30, 31, 32)
CANONICAL_CASES = (1, *NON_RI_GROUP, *RI_GROUP)

SINGLE_TRIVIAL = (16, 17, 19, 21, 22, 23, 24)
NON_SINGLE_TRIVIAL = (11, 14, 18, 20)
FLOWER_TRIVIAL = (31, 32)
NON_FLOWER_TRIVIAL = (25, 26, 27, 28, 29, 30)

# Contracting sets (7), (8), (9) reach every move type through these identities
GENERATION = {
    7: ((WRIII, (SRII, SRIII)), (WRII, (RI, SRII, WRIII))),
    8: ((SRIII, (SRII, WRIII)), (WRII, (RI, SRII, WRIII))),
    9: ((SRII, (RI, WRII, SRIII)), (WRIII, (SRII, SRIII))),
}


@dataclass(frozen=True)
class RelationId:
    """One of the 32 cases."""

    number: int

    def __post_init__(self):
        if self.number not in CASES:
            raise ValueError(f"cases are numbered 1..32, got {self.number}")

    @property
    def moves(self) -> MoveSet:
        return CASES[self.number]

    @property
    def label(self) -> str:
        return f"({self.number})"

    @property
    def is_contracting(self) -> bool:
        return self.number in CONTRACTING

    @property
    def representative(self) -> "RelationId":
        """Member of the 20 distinct relations generating the same equivalence."""
        for group in EQUIVALENT_CASES:
            if self.number in group:
                return RelationId(group[0])
        return self

    def __str__(self) -> str:
        return f"{self.label} {self.moves.label}"


def case_of(moves: MoveSet) -> int:
    """Case number of a move set."""
    for number, case_moves in CASES.items():
        if case_moves == moves:
            return number
    raise ValueError(f"{moves.label} is not a subset of the five move types")


def canonical_relations() -> list[RelationId]:
    return [RelationId(number) for number in CANONICAL_CASES]


def relation_pairs() -> list[tuple[RelationId, RelationId]]:
    """The 190 unordered pairs of distinct non-trivial relations."""
    relations = canonical_relations()
    return [
        (first, second)
        for i, first in enumerate(relations)
        for second in relations[i + 1 :]
    ]
