"""Equivalence relations (partitions) and plain pair relations on a finite carrier."""
import re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from src.errors import ElementRangeError, PartitionError

Pair = Tuple[int, int]

_BLOCK = re.compile(r"\{([^{}]*)\}")
_BLOCK_LIST = re.compile(r"\s*(?:\{[^{}]*\}\s*(?:,\s*\{[^{}]*\}\s*)*)?")


class DisjointSet:
    """Union-find forest over 0..count-1 with path compression and union by rank."""

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.rank = [0] * count
        self.groups = count

    def find(self, element: int) -> int:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """Merge two classes; returns False if they were already merged."""
        rep_first = self.find(first)
        rep_second = self.find(second)
        if rep_first == rep_second:
            return False

        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1

        self.groups -= 1
        return True

    def unite_all(self, elements: Iterable[int]) -> bool:
        """Merge every element of the iterable into one class."""
        changed = False
        iterator = iter(elements)
        first = next(iterator, None)
        if first is None:
            return False
        for element in iterator:
            changed = self.unite(first, element) or changed
        return changed

    def same(self, first: int, second: int) -> bool:
        return self.find(first) == self.find(second)

    def __len__(self) -> int:
        return self.groups


def _canonical_labels(roots: Sequence[int]) -> Tuple[int, ...]:
    """Relabel class representatives so block k is the k-th block by minimum element."""
    relabel = {}
    labels = []
    for root in roots:
        if root not in relabel:
            relabel[root] = len(relabel)
        labels.append(relabel[root])
    return tuple(labels)


@dataclass(frozen=True)
class EquivRelation:
    """A partition of 0..n-1, stored as canonical block labels.

    ``labels[x]`` is the index of the block of ``x``; blocks are numbered by
    their minimum element, so two equal partitions have equal labels.
    """
    labels: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise PartitionError("a partition needs a nonempty carrier")
        if _canonical_labels(labels) != labels:
            raise PartitionError(f"labels {labels} are not canonical")
        object.__setattr__(self, "labels", labels)
        grouped: List[List[int]] = [[] for _ in range(max(labels) + 1)]
        for element, label in enumerate(labels):
            grouped[label].append(element)
        object.__setattr__(self, "blocks", tuple(tuple(block) for block in grouped))

    @classmethod
    def from_blocks(cls, carrier_size: int, blocks: Iterable[Iterable[int]]) -> "EquivRelation":
        """Build from an explicit block list; blocks must be disjoint and cover the carrier."""
        owner = [-1] * carrier_size
        for index, block in enumerate(blocks):
            members = list(block)
            if not members:
                raise PartitionError("empty block in partition")
            for element in members:
                if not 0 <= element < carrier_size:
                    raise PartitionError(f"element {element} outside carrier of size {carrier_size}")
                if owner[element] != -1:
                    raise PartitionError(f"element {element} appears in two blocks")
                owner[element] = index
        missing = [element for element, label in enumerate(owner) if label == -1]
        if missing:
            raise PartitionError(f"partition does not cover elements {missing}")
        return cls(_canonical_labels(owner))

    @classmethod
    def from_disjoint_set(cls, forest: DisjointSet) -> "EquivRelation":
        return cls(_canonical_labels([forest.find(x) for x in range(len(forest.parent))]))

    @classmethod
    def from_pairs(cls, carrier_size: int, pairs: Iterable[Pair]) -> "EquivRelation":
        """Reflexive-symmetric-transitive closure of a pair set."""
        forest = DisjointSet(carrier_size)
        for x, y in pairs:
            forest.unite(x, y)
        return cls.from_disjoint_set(forest)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "EquivRelation":
        """From a restricted-growth string (already canonical labels)."""
        return cls(tuple(rgs))

    @classmethod
    def diagonal(cls, carrier_size: int) -> "EquivRelation":
        return cls(tuple(range(carrier_size)))

    @classmethod
    def total(cls, carrier_size: int) -> "EquivRelation":
        return cls((0,) * carrier_size)

    @classmethod
    def parse(cls, text: str, carrier_size: int) -> "EquivRelation":
        """Parse the serialized form, e.g. ``{{0,1},{2}}``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise PartitionError(f"partition must be written as {{{{...}},...}}: {text!r}")
        inner = body[1:-1]
        if not _BLOCK_LIST.fullmatch(inner):
            raise PartitionError(f"partition must be a comma-separated list of {{...}} blocks: {text!r}")
        blocks = []
        for match in _BLOCK.finditer(inner):
            members = [item.strip() for item in match.group(1).split(",") if item.strip()]
            try:
                blocks.append([int(item) for item in members])
            except ValueError as e:
                raise PartitionError(f"partition members must be element indices: {text!r}") from e
        return cls.from_blocks(carrier_size, blocks)

    @property
    def carrier_size(self) -> int:
        return len(self.labels)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, element: int) -> Tuple[int, ...]:
        return self.blocks[self.labels[element]]

    def related(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def is_diagonal(self) -> bool:
        return self.block_count == self.carrier_size

    def is_total(self) -> bool:
        return self.block_count == 1

    def pairs(self) -> FrozenSet[Pair]:
        return frozenset((x, y) for block in self.blocks for x in block for y in block)

    def refines(self, other: "EquivRelation") -> bool:
        """True iff self ⊆ other as sets of pairs."""
        self._check_same_carrier(other)
        image = {}
        for label, other_label in zip(self.labels, other.labels):
            if image.setdefault(label, other_label) != other_label:
                return False
        return True

    def __le__(self, other: "EquivRelation") -> bool:
        return self.refines(other)

    def meet(self, other: "EquivRelation") -> "EquivRelation":
        """Common refinement (intersection of pair sets)."""
        self._check_same_carrier(other)
        keys = list(zip(self.labels, other.labels))
        return EquivRelation(_canonical_labels(keys))

    def join(self, other: "EquivRelation") -> "EquivRelation":
        """Supremum in the lattice of all equivalence relations."""
        self._check_same_carrier(other)
        forest = DisjointSet(self.carrier_size)
        for relation in (self, other):
            for block in relation.blocks:
                forest.unite_all(block)
        return EquivRelation.from_disjoint_set(forest)

    def _check_same_carrier(self, other: "EquivRelation"):
        if self.carrier_size != other.carrier_size:
            raise PartitionError(
                f"partitions of different carriers ({self.carrier_size} vs {other.carrier_size})"
            )

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(str(x) for x in block) + "}" for block in self.blocks) + "}"


@dataclass(frozen=True)
class PairRelation:
    """A finite set of ordered pairs over 0..n-1 with no closure properties assumed."""
    carrier_size: int
    pairs: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        pairs = frozenset((int(x), int(y)) for x, y in self.pairs)
        for x, y in pairs:
            if not (0 <= x < self.carrier_size and 0 <= y < self.carrier_size):
                raise ElementRangeError(f"pair {(x, y)} outside carrier of size {self.carrier_size}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def empty(cls, carrier_size: int) -> "PairRelation":
        return cls(carrier_size, frozenset())

    @classmethod
    def all_pairs(cls, carrier_size: int) -> "PairRelation":
        return cls(carrier_size, frozenset((x, y) for x in range(carrier_size) for y in range(carrier_size)))

    @classmethod
    def of(cls, relation: EquivRelation) -> "PairRelation":
        return cls(relation.carrier_size, relation.pairs())

    def union(self, other: "PairRelation") -> "PairRelation":
        return PairRelation(self.carrier_size, self.pairs | other.pairs)

    def __or__(self, other: "PairRelation") -> "PairRelation":
        return self.union(other)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def contained_in(self, relation: EquivRelation) -> bool:
        """True iff every pair lies inside one block of ``relation``."""
        return all(relation.related(x, y) for x, y in self.pairs)

    def closure(self) -> EquivRelation:
        """Reflexive-symmetric-transitive closure as a partition."""
        return EquivRelation.from_pairs(self.carrier_size, self.pairs)

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)

    def is_diagonal(self) -> bool:
        return all(x == y for x, y in self.pairs)
