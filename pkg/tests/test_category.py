import itertools

import pytest
from conftest import CORPUS

from src.category.morphisms import (
    F_I_on_morphism,
    are_isomorphic,
    commutative_rings,
    factor_through,
    find_isomorphism,
    fundamental_comparison,
    kernel,
    reflect,
)
from src.core.homomorphism import (
    Homomorphism,
    compose,
    constant_homomorphism,
    identity_homomorphism,
    projection,
)
from src.core.multialgebra import Multialgebra, factor, one_element
from src.errors import (
    FactorizationError,
    PartitionError,
    SignatureMismatchError,
    VarietyMembershipError,
)
from src.generators.structures import (
    RING_SIGNATURE,
    cyclic_group,
    cyclic_ring,
    krasner_from_ring,
    noncommutative_ring4,
    total_hyperstructure,
)
from src.relations.closure import alpha_star_I, fundamental, in_Eua
from src.relations.equivalence import EquivRelation
from src.relations.oracles import all_partitions
from src.terms.syntax import IdentitySet, commutativity_identities

PARITY = EquivRelation.parse("{{0,2},{1,3}}", 4)

COMMUTATIVE_RING_TARGETS = [
    ("trivial", one_element(RING_SIGNATURE)),
    ("Z2", cyclic_ring(2)),
    ("Z3", cyclic_ring(3)),
    ("Z4", cyclic_ring(4)),
]


def all_maps(source, target):
    for mapping in itertools.product(range(target.carrier_size), repeat=source.carrier_size):
        yield Homomorphism(source, target, mapping)


def all_homomorphisms(source, target):
    return [h for h in all_maps(source, target) if h.is_homomorphism]


def reflection_triples():
    """Every homomorphism from a ring-type corpus structure into a small commutative ring."""
    triples = []
    for name, source in CORPUS:
        if source.signature != RING_SIGNATURE:
            continue
        for target_name, target in COMMUTATIVE_RING_TARGETS:
            for h in all_homomorphisms(source, target):
                images = "".join(str(x) for x in h.mapping)
                triples.append(pytest.param(h, id=f"{name}->{target_name}:{images}"))
    return triples


REFLECTION_TRIPLES = reflection_triples()


@pytest.fixture
def parity_map(z4, z2):
    return Homomorphism(z4, z2, (0, 1, 0, 1))


# Kernels and factorisation

def test_kernel_of_constant_map_is_total(total2):
    assert kernel(constant_homomorphism(total2, one_element(total2.signature))).is_total()


def test_kernel_of_identity_is_diagonal(k3):
    assert kernel(identity_homomorphism(k3)).is_diagonal()


def test_kernel_of_reduction_mod_two(parity_map):
    assert kernel(parity_map) == PARITY


def test_factor_through_kernel(parity_map, z2):
    induced = factor_through(parity_map, PARITY)
    assert induced.mapping == (0, 1)
    assert induced.is_isomorphism()
    assert compose(induced, projection(parity_map.source, PARITY)) == parity_map


def test_factor_through_finer_relation(parity_map, z4):
    diagonal = EquivRelation.diagonal(4)
    induced = factor_through(parity_map, diagonal)
    assert induced.source == factor(z4, diagonal)
    assert induced.mapping == (0, 1, 0, 1)


def test_factor_through_needs_containment_in_kernel(parity_map):
    with pytest.raises(FactorizationError):
        factor_through(parity_map, EquivRelation.total(4))
    with pytest.raises(PartitionError):
        factor_through(parity_map, EquivRelation.total(3))


# Varieties and reflections

def test_commutative_ring_membership(k3):
    variety = commutative_rings()
    assert variety.contains(cyclic_ring(3))
    assert variety.contains(one_element(RING_SIGNATURE))
    assert not variety.contains(noncommutative_ring4())
    assert "not a universal algebra" in variety.membership_error(k3)
    assert "type" in variety.membership_error(cyclic_group(3))


def test_reflection_into_the_terminal_ring(k3):
    trivial = one_element(RING_SIGNATURE)
    induced = reflect(k3, commutative_rings(), constant_homomorphism(k3, trivial))
    assert induced.source.carrier_size == 1
    assert induced.mapping == (0,)
    assert induced.report.satisfies_condition_1_prime


def test_reflection_of_identity_on_a_commutative_ring(z4):
    induced = reflect(z4, commutative_rings(), identity_homomorphism(z4))
    assert induced.is_isomorphism()


def test_reflection_of_reduction_mod_two(z4, parity_map):
    induced = reflect(z4, commutative_rings(), parity_map)
    assert induced.mapping == (0, 1, 0, 1)
    assert induced.report.satisfies_condition_1_prime


def test_reflection_of_noncommutative_ring_collapses_parity():
    n4 = noncommutative_ring4()
    z2 = cyclic_ring(2)
    h = Homomorphism(n4, z2, (0, 1, 0, 1))
    assert h.is_homomorphism
    induced = reflect(n4, commutative_rings(), h)
    assert induced.source.carrier_size == 2
    assert induced.is_isomorphism()


def test_reflection_preconditions(k3, z4):
    variety = commutative_rings()
    with pytest.raises(VarietyMembershipError):
        reflect(k3, variety, identity_homomorphism(k3))
    n4 = noncommutative_ring4()
    with pytest.raises(VarietyMembershipError):
        reflect(n4, variety, identity_homomorphism(n4))
    with pytest.raises(SignatureMismatchError):
        reflect(k3, variety, identity_homomorphism(z4))


def test_reflection_triples_cover_the_corpus():
    assert len(REFLECTION_TRIPLES) >= 10
    assert len({triple.values[0].source for triple in REFLECTION_TRIPLES}) >= 5


@pytest.mark.parametrize("h", REFLECTION_TRIPLES)
def test_reflection_exists_commutes_and_is_unique(h):
    variety = commutative_rings()
    relation = alpha_star_I(h.source, variety.identities)
    quotient = factor(h.source, relation)
    induced = reflect(h.source, variety, h)
    assert induced.source == quotient
    assert induced.report.satisfies_condition_1_prime
    assert all(induced(relation.labels[a]) == h(a) for a in h.source.elements)
    commuting = [
        g for g in all_maps(quotient, h.target) if all(g(relation.labels[a]) == h(a) for a in h.source.elements)
    ]
    assert commuting == [induced]


@pytest.mark.parametrize(
    "target", [target for _, target in COMMUTATIVE_RING_TARGETS], ids=[name for name, _ in COMMUTATIVE_RING_TARGETS]
)
def test_hyperrings_reflect_into_commutative_rings(hyperring, target):
    variety = commutative_rings()
    relation = alpha_star_I(hyperring, variety.identities)
    assert variety.contains(factor(hyperring, relation))
    homomorphisms = all_homomorphisms(hyperring, target)
    assert homomorphisms
    for h in homomorphisms:
        induced = reflect(hyperring, variety, h)
        assert compose(induced, projection(hyperring, relation)) == h


# F_I on morphisms

def functor_category():
    objects = [
        krasner_from_ring(5, [1, 4]),
        total_hyperstructure(2),
        cyclic_ring(4),
        cyclic_ring(2),
        noncommutative_ring4(),
        one_element(RING_SIGNATURE),
    ]
    morphisms = [h for source in objects for target in objects for h in all_homomorphisms(source, target)]
    return objects, morphisms


@pytest.mark.parametrize(
    "identities",
    [IdentitySet.of(), commutativity_identities(), commutative_rings().identities],
    ids=["no-identities", "commutativity", "commutative-rings"],
)
def test_F_I_is_a_functor(identities):
    objects, morphisms = functor_category()
    assert len(objects) >= 5
    assert len(morphisms) >= 8
    relations = {obj: alpha_star_I(obj, identities) for obj in objects}

    def image(h):
        return F_I_on_morphism(h, identities, relations[h.source], relations[h.target])

    for obj in objects:
        assert image(identity_homomorphism(obj)) == identity_homomorphism(factor(obj, relations[obj]))
    composable = 0
    for first in morphisms:
        for second in morphisms:
            if first.target is second.source:
                assert image(compose(second, first)) == compose(image(second), image(first))
                composable += 1
    assert composable >= 8


def test_F_I_commutes_with_projections(parity_map):
    identities = commutativity_identities()
    image = F_I_on_morphism(parity_map, identities)
    source_relation = alpha_star_I(parity_map.source, identities)
    target_relation = alpha_star_I(parity_map.target, identities)
    assert compose(image, projection(parity_map.source, source_relation)) == compose(
        projection(parity_map.target, target_relation), parity_map
    )


def test_F_I_rejects_non_homomorphisms(z2_group):
    swap = Homomorphism(z2_group, z2_group, (1, 0))
    with pytest.raises(FactorizationError):
        F_I_on_morphism(swap, IdentitySet.of())


# Comparison maps

def test_fundamental_comparison_is_strong_exactly_on_strongly_regular_relations(structure):
    base = fundamental(structure)
    for relation in all_partitions(structure.carrier_size):
        if not base.refines(relation):
            continue
        comparison = fundamental_comparison(structure, relation)
        assert comparison.is_homomorphism
        assert comparison.is_surjective()
        assert comparison.report.satisfies_condition_1_prime == in_Eua(structure, relation)


def test_fundamental_comparison_needs_coarser_relation(k3):
    with pytest.raises(PartitionError):
        fundamental_comparison(k3, EquivRelation.diagonal(3))


# Isomorphism search

def _relabelled_z4(perm):
    inverse = [perm.index(x) for x in range(4)]
    return Multialgebra.from_functions(
        4,
        RING_SIGNATURE,
        {
            "plus": lambda x, y: perm[(inverse[x] + inverse[y]) % 4],
            "times": lambda x, y: perm[(inverse[x] * inverse[y]) % 4],
        },
    )


def test_isomorphism_to_self(k3):
    found = find_isomorphism(k3, k3)
    assert found is not None
    assert found.is_isomorphism()


def test_isomorphism_to_relabelled_copy(z4):
    perm = (2, 0, 3, 1)
    found = find_isomorphism(z4, _relabelled_z4(perm))
    assert found is not None
    assert found.is_isomorphism()
    assert found(0) == perm[0]


def test_non_isomorphic_structures(z4, z2):
    assert find_isomorphism(z4, noncommutative_ring4()) is None
    assert find_isomorphism(z4, z2) is None
    assert are_isomorphic(factor(z4, PARITY), z2)


def test_isomorphism_needs_equal_types(k3, z2_group):
    with pytest.raises(SignatureMismatchError):
        find_isomorphism(k3, z2_group)
