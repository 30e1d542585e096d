"""Axioms of H_v-structures and hyperrings, derived divisions, and ring/group checks on factors."""
import logging
from dataclasses import asdict, dataclass
from typing import Dict, Optional, Tuple

from src.core.multialgebra import Multialgebra, Signature, Subset, is_universal_algebra, tuple_index
from src.errors import AxiomError
from src.terms.evaluation import check_identity
from src.terms.syntax import associativity, commutativity, left_distributivity, right_distributivity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomReport:
    weak_associative_plus: bool
    associative_plus: bool
    reproducible_plus: bool
    weak_associative_times: bool
    associative_times: bool
    weak_distributive: bool
    distributive: bool
    hv_group_plus: bool
    hypergroup_plus: bool
    hv_ring: bool
    hyperring: bool
    plus_weak_commutative: bool
    times_weak_commutative: bool

    def as_dict(self) -> Dict[str, bool]:
        return asdict(self)


def require_binary(algebra: Multialgebra, *symbols: str):
    for symbol in symbols:
        if symbol not in algebra.signature:
            raise AxiomError(f"structure has no operation {symbol!r}")
        if algebra.arity(symbol) != 2:
            raise AxiomError(f"operation {symbol!r} must be binary, has arity {algebra.arity(symbol)}")


def is_reproducible(algebra: Multialgebra, symbol: str) -> bool:
    """a∘A = A∘a = A for every a."""
    require_binary(algebra, symbol)
    carrier = frozenset(algebra.elements)
    for a in algebra.elements:
        right = frozenset().union(*(algebra.apply(symbol, (a, x)) for x in algebra.elements))
        left = frozenset().union(*(algebra.apply(symbol, (x, a)) for x in algebra.elements))
        if right != carrier or left != carrier:
            return False
    return True


def check_axioms(algebra: Multialgebra, plus: str = "plus", times: str = "times") -> AxiomReport:
    """Exhaustive check of the H_v-ring and hyperring axioms."""
    require_binary(algebra, plus, times)
    assoc_plus = associativity(plus)
    assoc_times = associativity(times)
    left = left_distributivity(times, plus)
    right = right_distributivity(times, plus)

    weak_associative_plus = check_identity(algebra, assoc_plus.as_weak())
    associative_plus = check_identity(algebra, assoc_plus)
    reproducible_plus = is_reproducible(algebra, plus)
    weak_associative_times = check_identity(algebra, assoc_times.as_weak())
    associative_times = check_identity(algebra, assoc_times)
    weak_distributive = check_identity(algebra, left.as_weak()) and check_identity(algebra, right.as_weak())
    distributive = check_identity(algebra, left) and check_identity(algebra, right)

    hv_group_plus = weak_associative_plus and reproducible_plus
    hypergroup_plus = associative_plus and reproducible_plus
    hv_ring = hv_group_plus and weak_associative_times and weak_distributive
    report = AxiomReport(
        weak_associative_plus=weak_associative_plus,
        associative_plus=associative_plus,
        reproducible_plus=reproducible_plus,
        weak_associative_times=weak_associative_times,
        associative_times=associative_times,
        weak_distributive=weak_distributive,
        distributive=distributive,
        hv_group_plus=hv_group_plus,
        hypergroup_plus=hypergroup_plus,
        hv_ring=hv_ring,
        hyperring=hv_ring and hypergroup_plus and associative_times and distributive,
        plus_weak_commutative=check_identity(algebra, commutativity(plus).as_weak()),
        times_weak_commutative=check_identity(algebra, commutativity(times).as_weak()),
    )
    logger.debug(f"Axioms of {algebra.name or 'structure'}: {report}")
    return report


def derived_divisions(algebra: Multialgebra, symbol: str) -> Tuple[Tuple[Subset, ...], Tuple[Subset, ...]]:
    """Dense tables of b/a = {x : b ∈ x∘a} (indexed by (b, a)) and a\\b = {x : b ∈ a∘x} (indexed by (a, b))."""
    require_binary(algebra, symbol)
    n = algebra.carrier_size
    over = [set() for _ in range(n * n)]
    under = [set() for _ in range(n * n)]
    for (x, y), output in algebra.entries(symbol):
        for b in output:
            over[tuple_index((b, y), n)].add(x)
            under[tuple_index((x, b), n)].add(y)
    for index, (quotient, residual) in enumerate(zip(over, under)):
        if not quotient or not residual:
            args = divmod(index, n)
            raise AxiomError(f"{symbol!r} is not reproducible: empty division at {args}")
    return tuple(frozenset(entry) for entry in over), tuple(frozenset(entry) for entry in under)


def with_divisions(algebra: Multialgebra, symbol: str) -> Multialgebra:
    """The structure extended by ``<symbol>_over`` (b/a) and ``<symbol>_under`` (a\\b)."""
    over, under = derived_divisions(algebra, symbol)
    signature = Signature.of(
        *((op.symbol, op.arity) for op in algebra.signature.operations),
        (f"{symbol}_over", 2),
        (f"{symbol}_under", 2),
    )
    return Multialgebra(
        algebra.carrier_size,
        signature,
        algebra.tables + (over, under),
        name=algebra.name,
        element_names=algebra.element_names,
    )


def find_identity_element(algebra: Multialgebra, symbol: str) -> Optional[int]:
    """z with z∘x = x∘z = {x} for all x."""
    for z in algebra.elements:
        if all(
            algebra.apply(symbol, (z, x)) == {x} and algebra.apply(symbol, (x, z)) == {x}
            for x in algebra.elements
        ):
            return z
    return None


def has_inverses(algebra: Multialgebra, symbol: str, neutral: Optional[int]) -> bool:
    if neutral is None:
        return False
    target = frozenset([neutral])
    return all(
        any(algebra.apply(symbol, (x, y)) == target and algebra.apply(symbol, (y, x)) == target
            for y in algebra.elements)
        for x in algebra.elements
    )


@dataclass(frozen=True)
class GroupReport:
    single_valued: bool
    associative: bool
    identity: Optional[int]
    inverses: bool

    @property
    def is_semigroup(self) -> bool:
        return self.single_valued and self.associative

    @property
    def is_group(self) -> bool:
        return self.is_semigroup and self.identity is not None and self.inverses


def group_report(algebra: Multialgebra, symbol: str) -> GroupReport:
    require_binary(algebra, symbol)
    single_valued = all(len(output) == 1 for output in algebra.table(symbol))
    neutral = find_identity_element(algebra, symbol)
    return GroupReport(
        single_valued=single_valued,
        associative=check_identity(algebra, associativity(symbol)),
        identity=neutral,
        inverses=has_inverses(algebra, symbol, neutral),
    )


@dataclass(frozen=True)
class RingReport:
    single_valued: bool
    plus_associative: bool
    plus_commutative: bool
    times_associative: bool
    times_commutative: bool
    distributive: bool
    zero: Optional[int]
    additive_inverses: bool

    @property
    def is_ring_shaped(self) -> bool:
        """Single-valued, both operations associative, both distributive laws."""
        return self.single_valued and self.plus_associative and self.times_associative and self.distributive

    @property
    def is_commutative_ring(self) -> bool:
        return (
            self.is_ring_shaped
            and self.plus_commutative
            and self.times_commutative
            and self.zero is not None
            and self.additive_inverses
        )


def ring_report(algebra: Multialgebra, plus: str = "plus", times: str = "times") -> RingReport:
    """Strong ring axioms; zero is searched as the class z with z + x = x for all x."""
    require_binary(algebra, plus, times)
    zero = find_identity_element(algebra, plus)
    return RingReport(
        single_valued=is_universal_algebra(algebra),
        plus_associative=check_identity(algebra, associativity(plus)),
        plus_commutative=check_identity(algebra, commutativity(plus)),
        times_associative=check_identity(algebra, associativity(times)),
        times_commutative=check_identity(algebra, commutativity(times)),
        distributive=(
            check_identity(algebra, left_distributivity(times, plus))
            and check_identity(algebra, right_distributivity(times, plus))
        ),
        zero=zero,
        additive_inverses=has_inverses(algebra, plus, zero),
    )


def is_commutative_semigroup(algebra: Multialgebra, symbol: str) -> bool:
    report = group_report(algebra, symbol)
    return report.is_semigroup and check_identity(algebra, commutativity(symbol))
