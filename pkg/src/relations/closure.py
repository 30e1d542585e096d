"""Strongly regular relations (E_ua), the closure operator α and (I-)fundamental relations."""
import itertools
import logging
from typing import Iterable, List, Optional, Union

from src.core.multialgebra import Multialgebra, Subset
from src.errors import ElementRangeError, PartitionError
from src.relations.equivalence import DisjointSet, EquivRelation, PairRelation
from src.terms.evaluation import identity_values
from src.terms.syntax import IdentitySet

logger = logging.getLogger(__name__)

Seed = Union[PairRelation, EquivRelation, None]


def doublebar(relation: EquivRelation, left: Iterable[int], right: Iterable[int]) -> bool:
    """X ρ̿ Y, i.e. X × Y ⊆ ρ."""
    members = list(left) + list(right)
    for element in members:
        if not 0 <= element < relation.carrier_size:
            raise ElementRangeError(f"element {element} outside carrier of size {relation.carrier_size}")
    return len({relation.labels[element] for element in members}) <= 1


def _check_carrier(algebra: Multialgebra, relation: EquivRelation):
    if relation.carrier_size != algebra.carrier_size:
        raise PartitionError(
            f"partition of {relation.carrier_size} elements does not match carrier of size {algebra.carrier_size}"
        )


def _one_block(labels, output: Subset) -> Optional[int]:
    """The common block label of an output set, or None if it spans several blocks."""
    found = None
    for element in output:
        label = labels[element]
        if found is None:
            found = label
        elif label != found:
            return None
    return found


def in_Eua(algebra: Multialgebra, relation: EquivRelation) -> bool:
    """True iff A/ρ is a universal algebra.

    Checks every output set against ρ̿, then that changing one argument within its
    block keeps the outputs ρ̿-related.
    """
    _check_carrier(algebra, relation)
    labels = relation.labels
    n = algebra.carrier_size
    for op in algebra.signature.operations:
        table = algebra.table(op.symbol)
        block_of_entry = [_one_block(labels, output) for output in table]
        if any(label is None for label in block_of_entry):
            return False
        for position in range(op.arity):
            stride = n ** (op.arity - 1 - position)
            for index, args in enumerate(itertools.product(range(n), repeat=op.arity)):
                a = args[position]
                for b in relation.block_of(a):
                    if b > a and block_of_entry[index] != block_of_entry[index + (b - a) * stride]:
                        return False
    return True


def in_Eua_condition_c(algebra: Multialgebra, relation: EquivRelation) -> bool:
    """Direct check: componentwise related tuples give ρ̿-related outputs."""
    _check_carrier(algebra, relation)
    for op in algebra.signature.operations:
        for args, output in algebra.entries(op.symbol):
            choices = [relation.block_of(a) for a in args]
            for other in itertools.product(*choices):
                if not doublebar(relation, output, algebra.apply(op.symbol, other)):
                    return False
    return True


def alpha_closure(algebra: Multialgebra, seed: Seed = None) -> EquivRelation:
    """α(R): the least member of E_ua(A) containing R, by a union-find fixpoint."""
    n = algebra.carrier_size
    forest = DisjointSet(n)
    if isinstance(seed, EquivRelation):
        if seed.carrier_size != n:
            raise PartitionError(f"seed relation on {seed.carrier_size} elements, carrier has {n}")
        for block in seed.blocks:
            forest.unite_all(block)
    elif seed is not None:
        if seed.carrier_size != n:
            raise ElementRangeError(f"seed relation on {seed.carrier_size} elements, carrier has {n}")
        for x, y in seed.pairs:
            forest.unite(x, y)

    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for op in algebra.signature.operations:
            table = algebra.table(op.symbol)
            for output in table:
                changed = forest.unite_all(output) or changed
            for position in range(op.arity):
                stride = n ** (op.arity - 1 - position)
                for index, args in enumerate(itertools.product(range(n), repeat=op.arity)):
                    a = args[position]
                    for b in range(a + 1, n):
                        if forest.same(a, b):
                            other = index + (b - a) * stride
                            changed = forest.unite(next(iter(table[index])), next(iter(table[other]))) or changed
        logger.debug(f"alpha closure pass {passes}: {len(forest)} blocks")

    result = EquivRelation.from_disjoint_set(forest)
    logger.debug(f"alpha closure stable after {passes} passes: {result}")
    return result


def fundamental(algebra: Multialgebra) -> EquivRelation:
    """α*: the least element of E_ua(A)."""
    return alpha_closure(algebra, None)


def relation_RI(algebra: Multialgebra, identities: IdentitySet) -> PairRelation:
    """R_I: union of q_i(a) × r_i(a) over all identities and all argument tuples."""
    pairs = set()
    for identity in identities:
        for _, left, right in identity_values(algebra, identity):
            pairs.update(itertools.product(left, right))
    return PairRelation(algebra.carrier_size, frozenset(pairs))


def alpha_star_I(algebra: Multialgebra, identities: IdentitySet) -> EquivRelation:
    """α*_I = α(R_I): least ρ in E_ua(A) whose factor satisfies every identity of I."""
    return alpha_closure(algebra, relation_RI(algebra, identities))


def alpha_closure_per_identity(algebra: Multialgebra, identities: IdentitySet) -> List[EquivRelation]:
    """α*_{q_i r_i} for each identity separately."""
    return [alpha_star_I(algebra, IdentitySet.of(identity)) for identity in identities]


def join_in_Eua(algebra: Multialgebra, relations: Iterable[EquivRelation]) -> EquivRelation:
    """Supremum in (E_ua(A), ⊆): α of the union; the fundamental relation for an empty family."""
    forest_pairs = set()
    for relation in relations:
        forest_pairs |= relation.pairs()
    return alpha_closure(algebra, PairRelation(algebra.carrier_size, frozenset(forest_pairs)))


def induced_on_factor(relation: EquivRelation, base: EquivRelation) -> EquivRelation:
    """ρ/base: the relation induced by ρ on the blocks of base (requires base ⊆ ρ)."""
    if not base.refines(relation):
        raise PartitionError(f"{base} is not contained in {relation}")
    return EquivRelation.from_blocks(
        base.block_count,
        _group_blocks(relation, base),
    )


def _group_blocks(relation: EquivRelation, base: EquivRelation) -> List[List[int]]:
    grouped = {}
    for index, block in enumerate(base.blocks):
        grouped.setdefault(relation.labels[block[0]], []).append(index)
    return list(grouped.values())


def lift_from_factor(induced: EquivRelation, base: EquivRelation) -> EquivRelation:
    """Inverse of induced_on_factor: the relation on A whose blocks are unions of base blocks."""
    blocks = [[x for index in block for x in base.blocks[index]] for block in induced.blocks]
    return EquivRelation.from_blocks(base.carrier_size, blocks)
