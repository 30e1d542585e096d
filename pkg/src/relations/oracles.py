"""Independent oracles for the closure engine.

Two brute-force paths are provided: enumeration of every partition of the carrier
(restricted-growth strings) filtered by the E_ua test, and saturation of the unary
polynomial functions of the algebra of nonempty subsets. Both are guarded because
their cost grows with Bell(n) and with 2**(2**n) respectively.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.core.multialgebra import Multialgebra, Subset, lift_unchecked
from src.errors import GuardExceededError, PartitionError
from src.relations.closure import _check_carrier, alpha_closure, doublebar, in_Eua
from src.relations.equivalence import DisjointSet, EquivRelation, PairRelation
from src.terms.evaluation import identity_values
from src.terms.syntax import IdentitySet, trivial_identity

logger = logging.getLogger(__name__)

DEFAULT_MAX_ENUM_CARRIER = 8
DEFAULT_MAX_SAT_CARRIER = 4
DEFAULT_SATURATION_CAP = 20000


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of 0..n-1 as RGS, in descending lexicographic order (discrete first)."""

    def extend(prefix: List[int], top: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(top + 1, -1, -1):
            prefix.append(value)
            yield from extend(prefix, max(top, value))
            prefix.pop()

    if n < 1:
        raise PartitionError("a partition needs a nonempty carrier")
    yield from extend([0], 0)


def all_partitions(n: int) -> Iterator[EquivRelation]:
    for rgs in restricted_growth_strings(n):
        yield EquivRelation.from_rgs(rgs)


def _guard_enumeration(algebra: Multialgebra, max_carrier: int):
    if algebra.carrier_size > max_carrier:
        raise GuardExceededError(
            f"partition enumeration needs carrier <= {max_carrier}, got {algebra.carrier_size}"
        )


def enumerate_Eua(algebra: Multialgebra, max_carrier: int = DEFAULT_MAX_ENUM_CARRIER) -> List[EquivRelation]:
    """Every partition ρ with A/ρ a universal algebra, in canonical order."""
    _guard_enumeration(algebra, max_carrier)
    members = [relation for relation in all_partitions(algebra.carrier_size) if in_Eua(algebra, relation)]
    logger.debug(f"E_ua of {algebra.name or 'structure'} has {len(members)} members")
    return members


def meet_of_Eua_containing(
    algebra: Multialgebra,
    seed: Optional[PairRelation] = None,
    members: Optional[Sequence[EquivRelation]] = None,
    max_carrier: int = DEFAULT_MAX_ENUM_CARRIER,
) -> EquivRelation:
    """Meet of all enumerated E_ua members containing the seed; the oracle for alpha_closure."""
    if members is None:
        members = enumerate_Eua(algebra, max_carrier)
    result = EquivRelation.total(algebra.carrier_size)
    for relation in members:
        if seed is None or seed.contained_in(relation):
            result = result.meet(relation)
    return result


@dataclass(frozen=True)
class Witness:
    """How a unary polynomial was first generated."""
    kind: str  # "constant", "identity" or "apply"
    element: Optional[int] = None
    symbol: Optional[str] = None
    args: Tuple[int, ...] = ()

    def describe(self, names: Sequence[str] = ()) -> str:
        if self.kind == "constant":
            return f"c{self.element}"
        if self.kind == "identity":
            return "X"
        if not self.args:
            return self.symbol
        inner = ", ".join(names[index] if names else f"p{index}" for index in self.args)
        return f"{self.symbol}({inner})"


@dataclass(frozen=True)
class UnaryPolyFunction:
    """A map P*(A) -> P*(A) given by its full value table.

    ``values[mask - 1]`` is the image of the subset encoded by the bit mask.
    """
    carrier_size: int
    values: Tuple[Subset, ...]
    witness: Witness

    def __call__(self, subset: Subset) -> Subset:
        return self.values[subset_mask(subset) - 1]

    def expression(self, catalogue: Sequence["UnaryPolyFunction"]) -> str:
        """Witness unfolded into a term over X and constants."""
        if self.witness.kind != "apply" or not self.witness.args:
            return self.witness.describe()
        names = [catalogue[index].expression(catalogue) for index in self.witness.args]
        return self.witness.describe(names)


def subset_mask(subset: Subset) -> int:
    mask = 0
    for element in subset:
        mask |= 1 << element
    return mask


def mask_subset(mask: int) -> Subset:
    return frozenset(element for element in range(mask.bit_length()) if mask >> element & 1)


class _Saturation:
    """Semi-naive closure of the unary polynomial clone on value tables."""

    def __init__(self, algebra: Multialgebra, cap: int):
        self.algebra = algebra
        self.cap = cap
        n = algebra.carrier_size
        self.size = (1 << n) - 1
        self.subsets = [mask_subset(mask) for mask in range(1, self.size + 1)]
        self.tables: List[Tuple[int, ...]] = []
        self.witnesses: List[Witness] = []
        self.seen: Dict[Tuple[int, ...], int] = {}
        self.lifted = {op.symbol: self._lift_table(op.symbol, op.arity) for op in algebra.signature.operations}

    def _lift_table(self, symbol: str, arity: int) -> Dict[Tuple[int, ...], int]:
        """Lifted operation on subset indices (mask - 1)."""
        table = {}
        for combo in itertools.product(range(self.size), repeat=arity):
            value = lift_unchecked(self.algebra, symbol, [self.subsets[index] for index in combo])
            table[combo] = subset_mask(value) - 1
        return table

    def add(self, values: Tuple[int, ...], witness: Witness) -> bool:
        if values in self.seen:
            return False
        if len(self.tables) >= self.cap:
            raise GuardExceededError(
                f"unary polynomial saturation exceeded cap {self.cap}", partial_size=len(self.tables)
            )
        self.seen[values] = len(self.tables)
        self.tables.append(values)
        self.witnesses.append(witness)
        return True

    def run(self) -> List[UnaryPolyFunction]:
        for element in self.algebra.elements:
            self.add((subset_mask({element}) - 1,) * self.size, Witness("constant", element=element))
        self.add(tuple(range(self.size)), Witness("identity"))
        for op in self.algebra.signature.operations:
            if op.arity == 0:
                self.add((self.lifted[op.symbol][()],) * self.size, Witness("apply", symbol=op.symbol))

        start, rounds = 0, 0
        while start < len(self.tables):
            end = len(self.tables)
            rounds += 1
            for op in self.algebra.signature.operations:
                if op.arity > 0:
                    self._apply_new(op.symbol, op.arity, start, end)
            logger.debug(f"saturation round {rounds}: {len(self.tables)} functions")
            start = end

        return [
            UnaryPolyFunction(
                self.algebra.carrier_size,
                tuple(self.subsets[value] for value in values),
                witness,
            )
            for values, witness in zip(self.tables, self.witnesses)
        ]

    def _apply_new(self, symbol: str, arity: int, start: int, end: int):
        """Apply symbol to every tuple over [0, end) that uses at least one function from [start, end)."""
        lifted = self.lifted[symbol]
        for first_new in range(arity):
            ranges = [range(0, start)] * first_new + [range(start, end)] + [range(0, end)] * (arity - first_new - 1)
            for combo in itertools.product(*ranges):
                columns = [self.tables[index] for index in combo]
                values = tuple(lifted[point] for point in zip(*columns))
                self.add(values, Witness("apply", symbol=symbol, args=combo))


def _guard_saturation(algebra: Multialgebra, max_carrier: int):
    if algebra.carrier_size > max_carrier:
        raise GuardExceededError(
            f"polynomial saturation needs carrier <= {max_carrier}, got {algebra.carrier_size}"
        )


def saturate_unary_polynomials(
    algebra: Multialgebra,
    max_carrier: int = DEFAULT_MAX_SAT_CARRIER,
    cap: int = DEFAULT_SATURATION_CAP,
) -> List[UnaryPolyFunction]:
    """Pol_1 of P*(A): generated by the singleton constants and the identity, deduplicated by value table."""
    _guard_saturation(algebra, max_carrier)
    functions = _Saturation(algebra, cap).run()
    logger.info(f"Saturated {len(functions)} unary polynomial functions on {algebra.name or 'structure'}")
    return functions


def alpha_I_via_polynomials(
    algebra: Multialgebra,
    identities: IdentitySet,
    polynomials: Optional[Sequence[UnaryPolyFunction]] = None,
    max_carrier: int = DEFAULT_MAX_SAT_CARRIER,
    cap: int = DEFAULT_SATURATION_CAP,
) -> EquivRelation:
    """Transitive closure of {(x, y) : x ∈ p(q(a)), y ∈ p(r(a))}, built without the fixpoint engine."""
    if polynomials is None:
        polynomials = saturate_unary_polynomials(algebra, max_carrier, cap)
    if not identities:
        identities = IdentitySet.of(trivial_identity())

    value_pairs = set()
    for identity in identities:
        for _, left, right in identity_values(algebra, identity):
            value_pairs.add((subset_mask(left) - 1, subset_mask(right) - 1))

    # x ∈ p(q), y ∈ p(r) for all such x, y joins p(q) ∪ p(r) into one class
    forest = DisjointSet(algebra.carrier_size)
    subsets = [mask_subset(mask) for mask in range(1, 1 << algebra.carrier_size)]
    for polynomial in polynomials:
        for left, right in value_pairs:
            forest.unite_all(polynomial(subsets[left]) | polynomial(subsets[right]))
    return EquivRelation.from_disjoint_set(forest)


def in_Eua_via_polynomials(
    algebra: Multialgebra,
    relation: EquivRelation,
    polynomials: Optional[Sequence[UnaryPolyFunction]] = None,
    max_carrier: int = DEFAULT_MAX_SAT_CARRIER,
    cap: int = DEFAULT_SATURATION_CAP,
) -> bool:
    """Polynomial form of strong regularity: a ρ b implies p({a}) ρ̿ p({b})."""
    _check_carrier(algebra, relation)
    if polynomials is None:
        polynomials = saturate_unary_polynomials(algebra, max_carrier, cap)
    for polynomial in polynomials:
        for block in relation.blocks:
            images = [polynomial(frozenset([a])) for a in block]
            for first, second in itertools.combinations_with_replacement(images, 2):
                if not doublebar(relation, first, second):
                    return False
    return True


def closure_agrees_with_enumeration(
    algebra: Multialgebra,
    seed: Optional[PairRelation] = None,
    max_carrier: int = DEFAULT_MAX_ENUM_CARRIER,
) -> Tuple[bool, EquivRelation, EquivRelation]:
    """(agree, engine result, oracle result) for one seed relation."""
    engine = alpha_closure(algebra, seed)
    oracle = meet_of_Eua_containing(algebra, seed, max_carrier=max_carrier)
    return engine == oracle, engine, oracle
