import pytest

from src.core.multialgebra import factor, one_element
from src.errors import AxiomError
from src.generators.structures import (
    RING_SIGNATURE,
    cyclic_group,
    cyclic_ring,
    inflate_ring,
    krasner_from_ring,
    left_projection,
    noncommutative_ring4,
    total_hyperstructure,
)
from src.hyperstructures.axioms import (
    check_axioms,
    derived_divisions,
    group_report,
    is_commutative_semigroup,
    is_reproducible,
    ring_report,
    with_divisions,
)
from src.hyperstructures.commutative import (
    SumOfProductsExpr,
    additive_commutative_relation,
    alpha0_pairs,
    alpha_pairs_def1,
    alpha_prime0_additive,
    alpha_star_hyperring,
    compare_strategies,
    compositions,
    expressions_of_size,
)
from src.relations.closure import alpha_star_I, fundamental
from src.relations.equivalence import EquivRelation
from src.relations.oracles import enumerate_Eua
from src.terms.syntax import commutativity_identities


# Axioms

def test_total_structure_is_a_hyperring(total2):
    report = check_axioms(total2)
    assert report.hyperring
    assert report.hypergroup_plus
    assert report.plus_weak_commutative and report.times_weak_commutative


def test_left_projection_is_associative_but_not_reproducible():
    report = check_axioms(left_projection(3))
    assert report.associative_plus
    assert not report.reproducible_plus
    assert not report.hyperring
    assert not report.hv_group_plus


def test_krasner_quotient_is_a_hyperring(k3):
    report = check_axioms(k3)
    assert report.hyperring
    assert report.hv_ring
    assert report.distributive


def test_axioms_need_binary_operations(m3):
    with pytest.raises(AxiomError):
        check_axioms(m3)


def test_strong_axioms_imply_weak_ones(hyperring):
    report = check_axioms(hyperring)
    assert report.weak_associative_plus and report.weak_associative_times
    assert report.weak_distributive
    assert report.hv_ring


# Divisions

def test_divisions_of_total_structure(total2):
    over, under = derived_divisions(total2, "plus")
    assert all(entry == {0, 1} for entry in over + under)


def test_group_division_is_subtraction():
    z3 = cyclic_group(3)
    over, _ = derived_divisions(z3, "plus")
    for b in range(3):
        for a in range(3):
            assert over[b * 3 + a] == {(b - a) % 3}


def test_krasner_division(k3):
    over, _ = derived_divisions(k3, "plus")
    assert over[0 * 3 + 1] == {1}


def test_division_needs_reproducibility():
    with pytest.raises(AxiomError):
        derived_divisions(left_projection(2, symbols=("f",)), "f")


def test_divisions_do_not_change_strong_regularity(k3, total2):
    for algebra in (k3, total2, cyclic_group(4), total_hyperstructure(3, symbols=("plus",))):
        extended = with_divisions(algebra, "plus")
        assert extended.signature.symbols[-2:] == ("plus_over", "plus_under")
        assert enumerate_Eua(extended) == enumerate_Eua(algebra)


def test_reproducibility(k3):
    assert is_reproducible(k3, "plus")
    assert not is_reproducible(k3, "times")


# Factors of hypergroups and hyperrings

def test_factor_of_hypergroup_by_strongly_regular_relation_is_a_group(hyperring):
    for relation in enumerate_Eua(hyperring):
        report = group_report(factor(hyperring, relation), "plus")
        assert report.is_group


def test_factor_of_hyperring_is_ring_shaped(hyperring):
    for relation in enumerate_Eua(hyperring):
        assert ring_report(factor(hyperring, relation)).is_ring_shaped


def test_ring_report_of_rings():
    assert ring_report(cyclic_ring(4)).is_commutative_ring
    n4 = ring_report(noncommutative_ring4())
    assert n4.is_ring_shaped
    assert not n4.times_commutative
    assert ring_report(one_element(RING_SIGNATURE)).is_commutative_ring


def test_commutative_semigroup():
    assert is_commutative_semigroup(cyclic_ring(3), "times")
    assert not is_commutative_semigroup(noncommutative_ring4(), "times")


# Sums of products

def test_compositions_of_three():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_expression_counts():
    # size 2 over 3 elements: a*b (9) and a+b (9)
    assert len(list(expressions_of_size(3, 2))) == 18


def test_adjacent_variants():
    expr = SumOfProductsExpr(((0, 1), (2,)))
    variants = {variant.summands for variant in expr.adjacent_variants()}
    assert variants == {((1, 0), (2,)), ((2,), (0, 1))}
    assert expr.canonical() == ((0, 1), (2,))
    assert expr.size == 3


def test_size_one_gives_only_diagonal_pairs(k3):
    assert alpha_pairs_def1(k3, 1).is_diagonal()
    assert alpha0_pairs(k3, 1).is_diagonal()


def test_commutative_ring_gives_only_diagonal_pairs():
    z2 = cyclic_ring(2)
    assert alpha_pairs_def1(z2, 3).is_diagonal()
    assert alpha0_pairs(z2, 3).is_diagonal()


def test_krasner_size_two_pairs(k3):
    assert (0, 2) in alpha_pairs_def1(k3, 2)
    adjacent = alpha0_pairs(k3, 2)
    for pair in [(0, 0), (0, 2), (2, 0), (2, 2)]:
        assert pair in adjacent
    assert alpha_pairs_def1(k3, 2).is_symmetric()


def test_additive_swaps(k3):
    assert alpha_prime0_additive(k3, 1).is_diagonal()
    pairs = alpha_prime0_additive(k3, 2)
    for pair in [(0, 0), (0, 2), (2, 0), (2, 2)]:
        assert pair in pairs


def test_additive_swaps_under_commutative_plus():
    z3 = cyclic_ring(3)
    assert alpha_prime0_additive(z3, 3).is_diagonal()


def test_pair_generators_need_a_hyperring():
    with pytest.raises(AxiomError):
        alpha_pairs_def1(left_projection(2), 2)


def test_pairs_lie_inside_the_commutative_fundamental_relation(hyperring):
    target = alpha_star_I(hyperring, commutativity_identities())
    for size_cap in (1, 2, 3):
        assert alpha_pairs_def1(hyperring, size_cap).contained_in(target)
        assert alpha0_pairs(hyperring, size_cap).contained_in(target)
        assert alpha_prime0_additive(hyperring, size_cap).contained_in(target)


# Commutative fundamental relation

def test_ring_z2_converges_immediately():
    result = alpha_star_hyperring(cyclic_ring(2))
    assert result.relation.is_diagonal()
    assert result.converged_at == 1


@pytest.mark.parametrize("strategy", ["def1", "adjacent"])
def test_krasner_collapses_to_trivial_ring(k3, strategy):
    result = alpha_star_hyperring(k3, strategy)
    assert result.relation.is_total()
    assert result.converged_at == 2


def test_total_structure_collapses(total2):
    result = alpha_star_hyperring(total2)
    assert result.relation.is_total()
    assert result.converged


@pytest.mark.parametrize("strategy", ["def1", "adjacent"])
def test_noncommutative_ring_parity_classes(strategy):
    result = alpha_star_hyperring(noncommutative_ring4(), strategy)
    assert str(result.relation) == "{{0,2},{1,3}}"
    assert result.converged_at == 2
    assert ring_report(factor(noncommutative_ring4(), result.relation)).is_commutative_ring


def test_inflated_ring_gives_ideal_congruence():
    inflated = inflate_ring(cyclic_ring(4), [0, 2])
    assert str(fundamental(inflated)) == "{{0,2},{1,3}}"
    result = alpha_star_hyperring(inflated)
    assert result.converged
    assert result.relation == EquivRelation.parse("{{0,2},{1,3}}", 4)


def test_both_strategies_converge_to_the_same_relation(hyperring):
    results = compare_strategies(hyperring)
    target = alpha_star_I(hyperring, commutativity_identities())
    for result in results:
        assert result.converged
        assert result.relation == target
    factor_ring = factor(hyperring, results[0].relation)
    assert ring_report(factor_ring).is_commutative_ring


def test_weakly_commutative_hyperring_uses_fundamental_relation(hyperring):
    report = check_axioms(hyperring)
    if report.plus_weak_commutative and report.times_weak_commutative:
        assert alpha_star_hyperring(hyperring).relation == fundamental(hyperring)


@pytest.mark.parametrize(
    "algebra",
    [krasner_from_ring(5, [1, 4]), krasner_from_ring(7, [1, 2, 4]), krasner_from_ring(13, [1, 3, 9]), cyclic_ring(3)],
    ids=["K3", "krasner7", "krasner13", "Z3"],
)
def test_single_valued_commutative_product_reduces_to_additive_relation(algebra):
    assert is_commutative_semigroup(algebra, "times")
    assert alpha_star_hyperring(algebra).relation == additive_commutative_relation(algebra)


def test_non_convergence_is_reported(caplog):
    result = alpha_star_hyperring(noncommutative_ring4(), s_max=1)
    assert not result.converged
    assert result.converged_at is None
    assert result.relation.is_diagonal()
    assert "did not reach" in caplog.text


def test_unknown_strategy(k3):
    with pytest.raises(ValueError):
        alpha_star_hyperring(k3, "random")

