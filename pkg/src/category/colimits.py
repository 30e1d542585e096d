"""Finite directed diagrams of multialgebras, their colimits, and preservation by F_I."""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.homomorphism import Homomorphism, compose, identity_homomorphism, projection
from src.core.multialgebra import Multialgebra, factor
from src.errors import DiagramError, FactorizationError, TheoremViolation
from src.category.morphisms import F_I_on_morphism, factor_through
from src.relations.closure import alpha_star_I
from src.relations.equivalence import DisjointSet, EquivRelation
from src.terms.syntax import IdentitySet

logger = logging.getLogger(__name__)

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class DirectedDiagram:
    """Objects 0..k-1 with a directed partial order and a homomorphism for every i <= j.

    Use ``DirectedDiagram.build``: it adds identities and composites and validates eagerly.
    """
    algebras: Tuple[Multialgebra, ...]
    arrows: Mapping[Arrow, Homomorphism]

    @classmethod
    def build(
        cls,
        algebras: Sequence[Multialgebra],
        arrows: Mapping[Arrow, Union[Homomorphism, Sequence[int]]],
    ) -> "DirectedDiagram":
        algebras = tuple(algebras)
        if not algebras:
            raise DiagramError("a directed diagram needs at least one object")
        k = len(algebras)
        complete: Dict[Arrow, Homomorphism] = {}
        for (i, j), arrow in arrows.items():
            if not (0 <= i < k and 0 <= j < k):
                raise DiagramError(f"arrow {i}<={j} refers to an unknown object")
            if not isinstance(arrow, Homomorphism):
                arrow = Homomorphism(algebras[i], algebras[j], tuple(arrow))
            if arrow.source != algebras[i] or arrow.target != algebras[j]:
                raise DiagramError(f"arrow {i}<={j} does not connect objects {i} and {j}")
            if not arrow.is_homomorphism:
                raise DiagramError(f"arrow {i}<={j} is not a homomorphism")
            if i == j and arrow != identity_homomorphism(algebras[i]):
                raise DiagramError(f"arrow {i}<={i} must be the identity")
            complete[(i, j)] = arrow
        for i in range(k):
            complete.setdefault((i, i), identity_homomorphism(algebras[i]))

        changed = True
        while changed:
            changed = False
            for (i, j), (j2, m) in itertools.product(list(complete), repeat=2):
                if j == j2 and (i, m) not in complete:
                    complete[(i, m)] = compose(complete[(j, m)], complete[(i, j)])
                    changed = True

        diagram = cls(algebras, complete)
        diagram._validate()
        return diagram

    def _validate(self):
        k = len(self.algebras)
        for i, j in self.arrows:
            if i != j and (j, i) in self.arrows:
                raise DiagramError(f"order is not antisymmetric: {i}<={j} and {j}<={i}")
        for (i, j), (j2, m) in itertools.product(self.arrows, repeat=2):
            if j == j2 and compose(self.arrows[(j, m)], self.arrows[(i, j)]) != self.arrows[(i, m)]:
                raise DiagramError(f"arrows do not commute: {j}<={m} after {i}<={j} differs from {i}<={m}")
        for i, j in itertools.combinations(range(k), 2):
            if not self.upper_bounds((i, j)):
                raise DiagramError(f"objects {i} and {j} have no common upper bound")
        for algebra in self.algebras[1:]:
            if algebra.signature != self.algebras[0].signature:
                raise DiagramError("all objects must have the same type")

    @property
    def size(self) -> int:
        return len(self.algebras)

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows

    def upper_bounds(self, indices: Sequence[int]) -> List[int]:
        return [u for u in range(self.size) if all(self.leq(i, u) for i in indices)]

    def maximum(self) -> int:
        """The top object, which every finite directed poset has."""
        for u in self.upper_bounds(range(self.size)):
            return u
        raise DiagramError("diagram has no maximum")

    def arrow(self, i: int, j: int) -> Homomorphism:
        if (i, j) not in self.arrows:
            raise DiagramError(f"no arrow {i}<={j}")
        return self.arrows[(i, j)]

    def order_pairs(self) -> List[Arrow]:
        return sorted(self.arrows)


@dataclass(frozen=True)
class ColimitResult:
    object: Multialgebra
    injections: Tuple[Homomorphism, ...]
    representatives: Tuple[Tuple[int, int], ...]


def colimit(diagram: DirectedDiagram) -> ColimitResult:
    """Disjoint union modulo (i, x) ~ (j, arrow(i<=j)(x)), operations via common upper bounds."""
    offsets = list(itertools.accumulate([0] + [algebra.carrier_size for algebra in diagram.algebras]))
    forest = DisjointSet(offsets[-1])
    for (i, j), arrow in diagram.arrows.items():
        for x, image in enumerate(arrow.mapping):
            forest.unite(offsets[i] + x, offsets[j] + image)
    classes = EquivRelation.from_disjoint_set(forest)

    owners = [(i, x) for i, algebra in enumerate(diagram.algebras) for x in algebra.elements]
    representatives = tuple(owners[block[0]] for block in classes.blocks)
    m = classes.block_count

    def class_of(i: int, x: int) -> int:
        return classes.labels[offsets[i] + x]

    signature = diagram.algebras[0].signature
    tables = []
    for op in signature.operations:
        table = []
        for args in itertools.product(range(m), repeat=op.arity):
            lifted = [representatives[c] for c in args]
            output = set()
            for u in diagram.upper_bounds([i for i, _ in lifted]):
                images = [diagram.arrow(i, u)(x) for i, x in lifted]
                output.update(class_of(u, b) for b in diagram.algebras[u].apply(op.symbol, images))
            table.append(frozenset(output))
        tables.append(tuple(table))

    obj = Multialgebra(m, signature, tuple(tables), name="colim")
    injections = tuple(
        Homomorphism(algebra, obj, tuple(class_of(i, x) for x in algebra.elements))
        for i, algebra in enumerate(diagram.algebras)
    )
    logger.debug(f"Colimit of {diagram.size} objects has {m} elements")
    return ColimitResult(obj, injections, representatives)


def induced_from_colimit(result: ColimitResult, cocone: Sequence[Homomorphism]) -> Homomorphism:
    """The map out of the colimit determined by a cocone ψ_i : A_i -> T."""
    if len(cocone) != len(result.injections):
        raise DiagramError(f"cocone has {len(cocone)} legs for {len(result.injections)} objects")
    target = cocone[0].target
    mapping: List[Optional[int]] = [None] * result.object.carrier_size
    for leg, injection in zip(cocone, result.injections):
        if leg.target != target:
            raise DiagramError("cocone legs must share one target")
        for x, c in enumerate(injection.mapping):
            value = leg(x)
            if mapping[c] is None:
                mapping[c] = value
            elif mapping[c] != value:
                raise DiagramError(f"cocone legs disagree on colimit element {c}")
    return Homomorphism(result.object, target, tuple(mapping))


def image_diagram(
    diagram: DirectedDiagram, identities: IdentitySet, relations: Sequence[EquivRelation]
) -> DirectedDiagram:
    """F_I applied to every object and arrow."""
    algebras = [factor(algebra, relation) for algebra, relation in zip(diagram.algebras, relations)]
    arrows = {
        (i, j): F_I_on_morphism(arrow, identities, relations[i], relations[j])
        for (i, j), arrow in diagram.arrows.items()
    }
    return DirectedDiagram.build(algebras, arrows)


@dataclass(frozen=True)
class PreservationReport:
    colimit: ColimitResult
    left: Multialgebra  # F_I(colim D)
    right: Multialgebra  # colim F_I D
    comparison: Homomorphism
    inverse: Homomorphism
    top_isomorphic: bool

    @property
    def is_isomorphism(self) -> bool:
        return (
            self.comparison.is_isomorphism()
            and compose(self.inverse, self.comparison) == identity_homomorphism(self.left)
            and compose(self.comparison, self.inverse) == identity_homomorphism(self.right)
        )


def check_colimit_preservation(diagram: DirectedDiagram, identities: IdentitySet) -> PreservationReport:
    """Canonical comparison F_I(colim D) -> colim F_I(D) and its inverse, both built from cocones."""
    source = colimit(diagram)
    source_relation = alpha_star_I(source.object, identities)
    left = factor(source.object, source_relation)

    relations = [alpha_star_I(algebra, identities) for algebra in diagram.algebras]
    images = image_diagram(diagram, identities, relations)
    target = colimit(images)

    legs = [
        compose(image_injection, projection(algebra, relation))
        for algebra, relation, image_injection in zip(diagram.algebras, relations, target.injections)
    ]
    try:
        comparison = factor_through(induced_from_colimit(source, legs), source_relation)
    except (DiagramError, FactorizationError) as e:
        raise TheoremViolation(f"comparison map could not be built: {e}") from e

    back_legs = [
        F_I_on_morphism(injection, identities, relation, source_relation)
        for injection, relation in zip(source.injections, relations)
    ]
    try:
        inverse = induced_from_colimit(target, back_legs)
    except DiagramError as e:
        raise TheoremViolation(f"inverse comparison could not be built: {e}") from e

    top = diagram.maximum()
    report = PreservationReport(
        colimit=source,
        left=left,
        right=target.object,
        comparison=comparison,
        inverse=inverse,
        top_isomorphic=source.injections[top].is_isomorphism(),
    )
    if not report.is_isomorphism:
        logger.warning("Comparison map between F_I(colim D) and colim F_I(D) is not an isomorphism")
    return report
