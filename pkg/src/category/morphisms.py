"""Kernels, factorisation through quotients, variety reflections and the functor F_I."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.core.homomorphism import Homomorphism, compose, projection
from src.core.multialgebra import Multialgebra, Signature, factor, is_universal_algebra, tuple_index
from src.errors import (
    FactorizationError,
    PartitionError,
    SignatureMismatchError,
    TheoremViolation,
    VarietyMembershipError,
)
from src.relations.closure import alpha_star_I, fundamental, in_Eua
from src.relations.equivalence import EquivRelation
from src.terms.evaluation import identity_counterexample
from src.terms.syntax import (
    IdentitySet,
    associativity,
    commutativity,
    left_distributivity,
    right_distributivity,
)

logger = logging.getLogger(__name__)


def kernel(h: Homomorphism) -> EquivRelation:
    """x ≡ y iff h(x) = h(y)."""
    blocks: Dict[int, List[int]] = {}
    for x, image in enumerate(h.mapping):
        blocks.setdefault(image, []).append(x)
    return EquivRelation.from_blocks(h.source.carrier_size, blocks.values())


def factor_through(h: Homomorphism, relation: EquivRelation) -> Homomorphism:
    """The unique map h̄ on A/ρ with h̄ ∘ π_ρ = h; requires ρ ⊆ ker h."""
    if relation.carrier_size != h.source.carrier_size:
        raise PartitionError(
            f"partition of {relation.carrier_size} elements does not match carrier of size {h.source.carrier_size}"
        )
    if not relation.refines(kernel(h)):
        raise FactorizationError(f"{relation} is not contained in the kernel {kernel(h)}")
    mapping = tuple(h.mapping[block[0]] for block in relation.blocks)
    return Homomorphism(factor(h.source, relation), h.target, mapping)


@dataclass(frozen=True)
class Variety:
    """Universal algebras of one type satisfying a set of strong identities."""
    signature: Signature
    identities: IdentitySet
    name: str = field(default="", compare=False)

    def membership_error(self, algebra: Multialgebra) -> Optional[str]:
        """Why ``algebra`` is not a member, or None."""
        if algebra.signature != self.signature:
            return f"type {algebra.signature} differs from {self.signature}"
        if not is_universal_algebra(algebra):
            return "not a universal algebra (some output has several elements)"
        for identity in self.identities:
            witness = identity_counterexample(algebra, identity.as_strong())
            if witness is not None:
                return f"identity {identity.as_strong()} fails at {witness}"
        return None

    def contains(self, algebra: Multialgebra) -> bool:
        return self.membership_error(algebra) is None


def commutative_rings(plus: str = "plus", times: str = "times") -> Variety:
    """Commutative associative +, · with both distributive laws.

    Zero and negation are not operations of the type, so membership is decided by these
    identities; the factors produced by hyperrings carry zero and inverses automatically.
    """
    identities = IdentitySet.of(
        commutativity(plus),
        commutativity(times),
        associativity(plus),
        associativity(times),
        left_distributivity(times, plus),
        right_distributivity(times, plus),
    )
    return Variety(Signature.of((plus, 2), (times, 2)), identities, name="commutative rings")


def reflect(algebra: Multialgebra, variety: Variety, h: Homomorphism) -> Homomorphism:
    """h̄ : A/α*_I -> B with h̄ ∘ π = h for B in the variety."""
    if h.source != algebra:
        raise SignatureMismatchError("the homomorphism does not start at the given structure")
    problem = variety.membership_error(h.target)
    if problem is not None:
        raise VarietyMembershipError(f"target is not in {variety.name or 'the variety'}: {problem}")
    if not h.is_homomorphism:
        raise FactorizationError("the map does not satisfy the homomorphism condition")

    relation = kernel(h)
    if not in_Eua(algebra, relation):
        raise TheoremViolation(f"kernel {relation} of a homomorphism into a universal algebra is not strongly regular")
    reflection = alpha_star_I(algebra, variety.identities)
    if not reflection.refines(relation):
        raise TheoremViolation(f"I-fundamental relation {reflection} is not contained in the kernel {relation}")

    induced = factor_through(h, reflection)
    if not induced.report.satisfies_condition_1_prime:
        raise TheoremViolation("induced map between universal algebras is not an algebra homomorphism")
    logger.debug(f"Reflected {algebra.name or 'structure'} through {reflection}")
    return induced


def F_I_on_morphism(
    h: Homomorphism,
    identities: IdentitySet,
    source_relation: Optional[EquivRelation] = None,
    target_relation: Optional[EquivRelation] = None,
) -> Homomorphism:
    """F_I(h) : A/α*_I -> B/α*_I with F_I(h) ∘ π_A = π_B ∘ h."""
    if not h.is_homomorphism:
        raise FactorizationError("F_I is only defined on homomorphisms")
    if source_relation is None:
        source_relation = alpha_star_I(h.source, identities)
    if target_relation is None:
        target_relation = alpha_star_I(h.target, identities)
    through = compose(projection(h.target, target_relation), h)
    try:
        return factor_through(through, source_relation)
    except FactorizationError as e:
        raise TheoremViolation(f"F_I could not be defined on a homomorphism: {e}") from e


def fundamental_comparison(algebra: Multialgebra, relation: EquivRelation) -> Homomorphism:
    """φ : A/α* -> A/ρ with φ ∘ π_α* = π_ρ (needs α* ⊆ ρ)."""
    base = fundamental(algebra)
    if not base.refines(relation):
        raise PartitionError(f"{relation} does not contain the fundamental relation {base}")
    return factor_through(projection(algebra, relation), base)


def _invariants(algebra: Multialgebra) -> List[Tuple]:
    """Per-element isomorphism invariants: output-size multisets per symbol and position, and occurrence counts."""
    n = algebra.carrier_size
    sizes = [[] for _ in range(n)]
    occurrences = [[] for _ in range(n)]
    for op in algebra.signature.operations:
        per_position = [[[] for _ in range(op.arity)] for _ in range(n)]
        counts = [0] * n
        for args, output in algebra.entries(op.symbol):
            for position, a in enumerate(args):
                per_position[a][position].append(len(output))
            for b in output:
                counts[b] += 1
        for x in range(n):
            sizes[x].append(tuple(tuple(sorted(column)) for column in per_position[x]))
            occurrences[x].append(counts[x])
    return [(tuple(sizes[x]), tuple(occurrences[x])) for x in range(n)]


def find_isomorphism(source: Multialgebra, target: Multialgebra) -> Optional[Homomorphism]:
    """First bijection with h(a∘b) = h(a)∘h(b) everywhere, in ascending candidate order, or None."""
    if source.signature != target.signature:
        raise SignatureMismatchError(f"types differ: {source.signature} vs {target.signature}")
    n = source.carrier_size
    if n != target.carrier_size:
        return None
    left, right = _invariants(source), _invariants(target)
    if sorted(left) != sorted(right):
        return None

    candidates = [[y for y in range(n) if right[y] == left[x]] for x in range(n)]
    entries = {op.symbol: list(source.entries(op.symbol)) for op in source.signature.operations}
    mapping = [-1] * n
    used = [False] * n

    def consistent(assigned: int) -> bool:
        for op in source.signature.operations:
            target_table = target.table(op.symbol)
            for args, output in entries[op.symbol]:
                if any(a > assigned for a in args) or (assigned not in args and assigned not in output):
                    continue
                expected = target_table[tuple_index([mapping[a] for a in args], n)]
                if len(expected) != len(output):
                    return False
                if any(b <= assigned and mapping[b] not in expected for b in output):
                    return False
        return True

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x], used[y] = y, True
            if consistent(x) and extend(x + 1):
                return True
            mapping[x], used[y] = -1, False
        return False

    if not extend(0):
        return None
    result = Homomorphism(source, target, tuple(mapping))
    if not result.is_isomorphism():
        raise TheoremViolation("isomorphism search returned a map that is not an isomorphism")
    return result


def are_isomorphic(first: Multialgebra, second: Multialgebra) -> bool:
    return find_isomorphism(first, second) is not None
