"""Multialgebra homomorphisms: the inclusion h(a∘b) ⊆ h(a)∘h(b) and the stronger equality."""
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from src.core.multialgebra import Multialgebra, Subset, factor, tuple_index
from src.errors import ElementRangeError, SignatureMismatchError
from src.relations.equivalence import EquivRelation


@dataclass(frozen=True)
class HomomorphismReport:
    """Which homomorphism conditions a map satisfies."""
    satisfies_condition_1: bool
    satisfies_condition_1_prime: bool


def _evaluate_conditions(source: Multialgebra, target: Multialgebra, mapping: Sequence[int]) -> HomomorphismReport:
    equality = True
    m = target.carrier_size
    for op in source.signature.operations:
        target_table = target.table(op.symbol)
        for args, output in source.entries(op.symbol):
            image = frozenset(mapping[b] for b in output)
            expected = target_table[tuple_index([mapping[a] for a in args], m)]
            if not image <= expected:
                return HomomorphismReport(False, False)
            if image != expected:
                equality = False
    return HomomorphismReport(True, equality)


@dataclass(frozen=True)
class Homomorphism:
    """A total map between multialgebras of the same type.

    The map need not satisfy the inclusion; the report computed at construction says
    whether it does.
    """
    source: Multialgebra
    target: Multialgebra
    mapping: Tuple[int, ...]
    report: HomomorphismReport = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        if self.source.signature != self.target.signature:
            raise SignatureMismatchError(
                f"source type ({self.source.signature}) differs from target type ({self.target.signature})"
            )
        if len(mapping) != self.source.carrier_size:
            raise ElementRangeError(
                f"map defines {len(mapping)} images for a carrier of size {self.source.carrier_size}"
            )
        for image in mapping:
            if not 0 <= image < self.target.carrier_size:
                raise ElementRangeError(f"image {image} outside target carrier of size {self.target.carrier_size}")
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "report", _evaluate_conditions(self.source, self.target, mapping))

    def __call__(self, element: int) -> int:
        return self.mapping[element]

    def image(self, subset: Iterable[int]) -> Subset:
        return frozenset(self.mapping[x] for x in subset)

    @property
    def is_homomorphism(self) -> bool:
        return self.report.satisfies_condition_1

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return set(self.mapping) == set(range(self.target.carrier_size))

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def is_isomorphism(self) -> bool:
        return self.is_bijective() and self.report.satisfies_condition_1_prime


def check_homomorphism(h: Homomorphism) -> HomomorphismReport:
    """Recompute the inclusion and equality conditions for ``h``."""
    return _evaluate_conditions(h.source, h.target, h.mapping)


def identity_homomorphism(algebra: Multialgebra) -> Homomorphism:
    return Homomorphism(algebra, algebra, tuple(algebra.elements))


def constant_homomorphism(source: Multialgebra, target: Multialgebra, value: int = 0) -> Homomorphism:
    return Homomorphism(source, target, (value,) * source.carrier_size)


def compose(g: Homomorphism, h: Homomorphism) -> Homomorphism:
    """g ∘ h (apply h first)."""
    if h.target != g.source:
        raise SignatureMismatchError("cannot compose: target of the first map is not the source of the second")
    return Homomorphism(h.source, g.target, tuple(g.mapping[x] for x in h.mapping))


def projection(algebra: Multialgebra, relation: EquivRelation) -> Homomorphism:
    """Canonical map x -> block of x onto the factor multialgebra."""
    return Homomorphism(algebra, factor(algebra, relation), relation.labels)
