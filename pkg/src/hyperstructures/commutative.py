"""The commutative-fundamental relation of a hyperring via sums of products.

Two generators of the relation are implemented: arbitrary permutations of summands and of
the factors inside each summand, and single adjacent transpositions. Neither carries a size
bound of its own, so both are explored by iterative deepening on the total number of factors
and compared against the generic I-fundamental relation for the two commutativity identities.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from src.core.multialgebra import Multialgebra, Subset, lift_unchecked, reduct
from src.errors import AxiomError, TheoremViolation
from src.hyperstructures.axioms import check_axioms, require_binary
from src.relations.closure import alpha_star_I
from src.relations.equivalence import EquivRelation, Pair, PairRelation
from src.terms.syntax import IdentitySet, commutativity, commutativity_identities

logger = logging.getLogger(__name__)

DEFAULT_S_MAX = 6
STRATEGIES = ("def1", "adjacent")


@dataclass(frozen=True)
class SumOfProductsExpr:
    """x_11...x_1k1 + ... + x_n1...x_nkn over carrier elements."""
    summands: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        summands = tuple(tuple(summand) for summand in self.summands)
        if not summands or any(not summand for summand in summands):
            raise ValueError("a sum of products needs at least one summand and one factor per summand")
        object.__setattr__(self, "summands", summands)

    @property
    def size(self) -> int:
        return sum(len(summand) for summand in self.summands)

    def canonical(self) -> Tuple[Tuple[int, ...], ...]:
        """Orbit key under permutations of summands and of factors within summands."""
        return tuple(sorted(tuple(sorted(summand)) for summand in self.summands))

    def adjacent_variants(self) -> Iterator["SumOfProductsExpr"]:
        """Expressions differing by one adjacent factor swap or one adjacent summand swap."""
        summands = list(self.summands)
        for i, summand in enumerate(summands):
            for j in range(len(summand) - 1):
                swapped = summand[:j] + (summand[j + 1], summand[j]) + summand[j + 2:]
                yield SumOfProductsExpr(tuple(summands[:i] + [swapped] + summands[i + 1:]))
        for i in range(len(summands) - 1):
            yield SumOfProductsExpr(
                tuple(summands[:i] + [summands[i + 1], summands[i]] + summands[i + 2:])
            )

    def __str__(self) -> str:
        return " + ".join("*".join(f"a{x}" for x in summand) for summand in self.summands)


def compositions(total: int) -> Iterator[Tuple[int, ...]]:
    """Ordered compositions of total into positive parts, lexicographically."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def expressions_of_size(carrier_size: int, size: int) -> Iterator[SumOfProductsExpr]:
    """All sums of products with exactly ``size`` factors: by shape, then lexicographically."""
    for shape in compositions(size):
        for flat in itertools.product(range(carrier_size), repeat=size):
            summands, start = [], 0
            for length in shape:
                summands.append(flat[start:start + length])
                start += length
            yield SumOfProductsExpr(tuple(summands))


class ExpressionEvaluator:
    """Values of sums of products, left-associated, with cached products."""

    def __init__(self, algebra: Multialgebra, plus: str, times: str):
        self.algebra = algebra
        self.plus = plus
        self.times = times
        self.product = lru_cache(maxsize=None)(self._product)

    def _product(self, factors: Tuple[int, ...]) -> Subset:
        value = frozenset([factors[0]])
        for factor in factors[1:]:
            value = lift_unchecked(self.algebra, self.times, (value, frozenset([factor])))
        return value

    def evaluate(self, expr: SumOfProductsExpr) -> Subset:
        value = self.product(expr.summands[0])
        for summand in expr.summands[1:]:
            value = lift_unchecked(self.algebra, self.plus, (value, self.product(summand)))
        return value


def _require_hyperring(algebra: Multialgebra, plus: str, times: str):
    report = check_axioms(algebra, plus, times)
    if not report.hyperring:
        raise AxiomError(f"{algebra.name or 'structure'} is not a hyperring")


def _square(values: Subset) -> Set[Pair]:
    return set(itertools.product(values, repeat=2))


def _def1_pairs_of_size(evaluator: ExpressionEvaluator, size: int) -> Set[Pair]:
    orbits: Dict[Tuple[Tuple[int, ...], ...], Set[int]] = {}
    for expr in expressions_of_size(evaluator.algebra.carrier_size, size):
        orbits.setdefault(expr.canonical(), set()).update(evaluator.evaluate(expr))
    pairs: Set[Pair] = set()
    for union in orbits.values():
        pairs |= _square(frozenset(union))
    return pairs


def _adjacent_pairs_of_size(evaluator: ExpressionEvaluator, size: int) -> Set[Pair]:
    pairs: Set[Pair] = set()
    for expr in expressions_of_size(evaluator.algebra.carrier_size, size):
        value = evaluator.evaluate(expr)
        if size == 1:
            pairs |= _square(value)
        for variant in expr.adjacent_variants():
            pairs.update(itertools.product(value, evaluator.evaluate(variant)))
    return pairs


def _collect(algebra: Multialgebra, size_cap: int, plus: str, times: str, by_size: Callable) -> PairRelation:
    if size_cap < 1:
        raise ValueError(f"size cap must be at least 1, got {size_cap}")
    _require_hyperring(algebra, plus, times)
    evaluator = ExpressionEvaluator(algebra, plus, times)
    pairs: Set[Pair] = set()
    for size in range(1, size_cap + 1):
        pairs |= by_size(evaluator, size)
    return PairRelation(algebra.carrier_size, frozenset(pairs))


def alpha_pairs_def1(algebra: Multialgebra, size_cap: int, plus: str = "plus", times: str = "times") -> PairRelation:
    """x in some sum of products, y in a permuted variant; all expressions with at most size_cap factors."""
    return _collect(algebra, size_cap, plus, times, _def1_pairs_of_size)


def alpha0_pairs(algebra: Multialgebra, size_cap: int, plus: str = "plus", times: str = "times") -> PairRelation:
    """t(a) × t'(a) where t' is t with one adjacent factor or summand transposed."""
    return _collect(algebra, size_cap, plus, times, _adjacent_pairs_of_size)


def alpha_prime0_additive(algebra: Multialgebra, size_cap: int, plus: str = "plus") -> PairRelation:
    """Pure sums z_1 + ... + z_n (n <= size_cap) against one adjacent transposition of summands."""
    require_binary(algebra, plus)
    if size_cap < 1:
        raise ValueError(f"size cap must be at least 1, got {size_cap}")

    def total(elements: Tuple[int, ...]) -> Subset:
        value = frozenset([elements[0]])
        for element in elements[1:]:
            value = lift_unchecked(algebra, plus, (value, frozenset([element])))
        return value

    pairs: Set[Pair] = {(x, x) for x in algebra.elements}
    for length in range(2, size_cap + 1):
        for summands in itertools.product(algebra.elements, repeat=length):
            value = total(summands)
            for i in range(length - 1):
                swapped = summands[:i] + (summands[i + 1], summands[i]) + summands[i + 2:]
                pairs.update(itertools.product(value, total(swapped)))
    return PairRelation(algebra.carrier_size, frozenset(pairs))


@dataclass(frozen=True)
class HyperringAlphaResult:
    relation: EquivRelation
    target: EquivRelation
    strategy: str
    converged_at: Optional[int]
    s_max: int
    pair_count: int

    @property
    def converged(self) -> bool:
        return self.converged_at is not None


def alpha_star_hyperring(
    algebra: Multialgebra,
    strategy: str = "def1",
    s_max: int = DEFAULT_S_MAX,
    plus: str = "plus",
    times: str = "times",
) -> HyperringAlphaResult:
    """Iterative deepening on expression size until the closure equals α*_I for commutativity.

    Every intermediate pair set must lie inside the target; otherwise TheoremViolation.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {', '.join(STRATEGIES)}")
    if s_max < 1:
        raise ValueError(f"S_MAX must be at least 1, got {s_max}")
    _require_hyperring(algebra, plus, times)

    target = alpha_star_I(algebra, commutativity_identities(plus, times))
    by_size = _def1_pairs_of_size if strategy == "def1" else _adjacent_pairs_of_size
    evaluator = ExpressionEvaluator(algebra, plus, times)
    pairs: Set[Pair] = set()
    relation = EquivRelation.diagonal(algebra.carrier_size)
    for size in range(1, s_max + 1):
        pairs |= by_size(evaluator, size)
        collected = PairRelation(algebra.carrier_size, frozenset(pairs))
        if not collected.contained_in(target):
            raise TheoremViolation(
                f"{strategy} pairs at size {size} escape the commutative-fundamental relation {target}"
            )
        relation = collected.closure()
        logger.debug(f"{strategy} size {size}: {len(pairs)} pairs, closure {relation}")
        if relation == target:
            logger.info(f"{strategy} converged at size {size} on {algebra.name or 'structure'}")
            return HyperringAlphaResult(relation, target, strategy, size, s_max, len(pairs))

    logger.warning(f"{strategy} did not reach {target} within S_MAX={s_max}; last closure {relation}")
    return HyperringAlphaResult(relation, target, strategy, None, s_max, len(pairs))


def additive_commutative_relation(algebra: Multialgebra, plus: str = "plus") -> EquivRelation:
    """α*_I of the additive reduct for x0 + x1 = x1 + x0."""
    return alpha_star_I(reduct(algebra, [plus]), IdentitySet.of(commutativity(plus)))


def compare_strategies(
    algebra: Multialgebra, s_max: int = DEFAULT_S_MAX, plus: str = "plus", times: str = "times"
) -> List[HyperringAlphaResult]:
    return [alpha_star_hyperring(algebra, strategy, s_max, plus, times) for strategy in STRATEGIES]
