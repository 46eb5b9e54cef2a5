"""
Distinctness matrix of the 20 non-trivial relations.

Each of the 190 pairs needs one probe pair of curves that is equal under one relation and
unequal under the other, each side backed by a certificate. Pairs are resolved in three
passes: certificates needing no search, then witness search for a cell whose partner is
already certified unequal, then the cited J+ values.
"""

from dataclasses import dataclass, field

from ..errors import UnseparatedPairError
from ..util.logger_config import logger
from .certificates import Certificate
from .relations import RelationId, relation_pairs
from .resolver import PROBES, CellResolver, Probe, Stage


@dataclass(frozen=True)
class Separation:
    """Why two relations differ: the probe curves, and one certificate per relation."""

    first: RelationId
    second: RelationId
    probe: Probe
    equal_certificate: Certificate
    unequal_certificate: Certificate

    @property
    def equal_under(self) -> RelationId:
        return RelationId(self.equal_certificate.case)

    @property
    def unequal_under(self) -> RelationId:
        return RelationId(self.unequal_certificate.case)

    @property
    def machine_checked(self) -> bool:
        return self.equal_certificate.machine_checked and self.unequal_certificate.machine_checked

    @property
    def source(self) -> str:
        return self.probe.source

    def to_row(self) -> dict:
        return {
            "first": self.first.number,
            "second": self.second.number,
            "probe": self.probe.name,
            "curves": f"{self.probe.first} / {self.probe.second}",
            "equal_under": self.equal_under.number,
            "equal_by": self.equal_certificate.kind.value,
            "unequal_under": self.unequal_under.number,
            "unequal_by": self.unequal_certificate.kind.value,
            "machine_checked": self.machine_checked,
            "source": self.source,
        }


@dataclass
class DistinctnessMatrix:
    relations: list[RelationId]
    separations: list[Separation] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        n = len(self.relations)
        return len(self.separations) == n * (n - 1) // 2

    @property
    def machine_checked_count(self) -> int:
        return sum(1 for s in self.separations if s.machine_checked)

    @property
    def cited_count(self) -> int:
        return len(self.separations) - self.machine_checked_count

    @property
    def coverage(self) -> float:
        """Fraction of separations with no cited certificate."""
        if not self.separations:
            return 0.0
        return self.machine_checked_count / len(self.separations)

    def count_by_source(self, source: str) -> int:
        return sum(1 for s in self.separations if s.source == source)

    def cited_pairs(self) -> list[tuple[int, int]]:
        return [
            (s.first.number, s.second.number) for s in self.separations if not s.machine_checked
        ]

    def separation(self, first: int, second: int) -> Separation:
        wanted = {first, second}
        for s in self.separations:
            if {s.first.number, s.second.number} == wanted:
                return s
        raise KeyError(f"no separation recorded for ({first}, {second})")

    def to_rows(self) -> list[dict]:
        return [s.to_row() for s in self.separations]

    def to_grid(self) -> list[list[str]]:
        """Square table naming the probe that separates each pair ("" on the diagonal)."""
        numbers = [r.number for r in self.relations]
        index = {number: i for i, number in enumerate(numbers)}
        grid = [["" for _ in numbers] for _ in numbers]
        for s in self.separations:
            i, j = index[s.first.number], index[s.second.number]
            grid[i][j] = grid[j][i] = s.probe.name
        return grid

    def summary(self) -> dict:
        return {
            "pairs": len(self.separations),
            "complete": self.complete,
            "machine_checked": self.machine_checked_count,
            "cited": self.cited_count,
            "coverage": round(self.coverage, 4),
            "published_probes": self.count_by_source("published"),
            "discovered_probes": self.count_by_source("discovered"),
            "cited_pairs": [list(pair) for pair in self.cited_pairs()],
        }


def _cells(
    resolver: CellResolver, pair: tuple[RelationId, RelationId], probe: Probe, stage: Stage
) -> tuple[Certificate | None, Certificate | None] | None:
    keys = resolver.probe_keys(probe)
    if keys is None:
        return None
    first, second = (relation.number for relation in pair)
    cells = [resolver.cheap(first, *keys), resolver.cheap(second, *keys)]
    if stage >= Stage.CITED:
        cells = [
            cell if cell is not None else resolver.cited(case, *keys)
            for cell, case in zip(cells, (first, second), strict=True)
        ]
    if stage >= Stage.SEARCH:
        for i, case in ((0, first), (1, second)):
            partner = cells[1 - i]
            if cells[i] is None and partner is not None and not partner.equal:
                cells[i] = resolver.search(case, *keys)
    return cells[0], cells[1]


def separate(
    resolver: CellResolver, pair: tuple[RelationId, RelationId], stage: Stage
) -> Separation | None:
    """First probe telling the pair apart with the certificates allowed at `stage`."""
    for probe in PROBES:
        cells = _cells(resolver, pair, probe, stage)
        if cells is None or None in cells:
            continue
        first_cell, second_cell = cells
        if first_cell.equal == second_cell.equal:
            continue
        if first_cell.equal:
            return Separation(pair[0], pair[1], probe, first_cell, second_cell)
        return Separation(pair[0], pair[1], probe, second_cell, first_cell)
    return None


def distinctness_matrix(
    resolver: CellResolver | None = None,
    pairs: list[tuple[RelationId, RelationId]] | None = None,
) -> DistinctnessMatrix:
    """
    Separate every pair of the 20 relations (or the given pairs).

    Raises:
        UnseparatedPairError: If some pair has no separating probe after all passes
    """
    resolver = resolver or CellResolver()
    pairs = relation_pairs() if pairs is None else pairs
    relations = sorted({r for pair in pairs for r in pair}, key=lambda r: r.number)
    matrix = DistinctnessMatrix(relations)

    pending = list(pairs)
    for stage in Stage:
        still = []
        for pair in pending:
            found = separate(resolver, pair, stage)
            if found is None:
                still.append(pair)
                continue
            resolver.store.add(found.equal_certificate)
            resolver.store.add(found.unequal_certificate)
            matrix.separations.append(found)
        separated = len(pending) - len(still)
        logger.info(f"matrix pass {stage.name.lower()}: {separated} pairs separated")
        pending = still

    for first, second in pending:
        logger.error(f"relations {first} and {second} are not separated")
    if pending:
        raise UnseparatedPairError(*pending[0])

    matrix.separations.sort(key=lambda s: (s.first.number, s.second.number))
    logger.info(
        f"distinctness matrix: {len(matrix.separations)} pairs, "
        f"{matrix.machine_checked_count} machine-checked, {matrix.cited_count} cited"
    )
    return matrix


__all__ = ["DistinctnessMatrix", "Separation", "distinctness_matrix", "separate"]
