"""Shared structures for the test suite."""
from pathlib import Path

import pytest

from src.config import Config
from src.core.multialgebra import Signature, one_element
from src.generators.structures import (
    RING_SIGNATURE,
    cyclic_group,
    cyclic_ring,
    inflate_ring,
    krasner_from_ring,
    left_projection,
    noncommutative_ring4,
    random_multialgebra,
    total_hyperstructure,
    unary_example,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

RANDOM_SIGNATURES = (
    Signature.of(("f", 2)),
    Signature.of(("u", 1), ("f", 2)),
    Signature.of(("plus", 2), ("times", 2)),
    Signature.of(("c", 0), ("u", 1)),
)


def named_corpus():
    """(id, structure) pairs with carrier <= 4; a dozen of them are seeded random structures."""
    corpus = [
        ("total2", total_hyperstructure(2)),
        ("total3", total_hyperstructure(3)),
        ("Z2-group", cyclic_group(2)),
        ("Z3-group", cyclic_group(3)),
        ("Z2", cyclic_ring(2)),
        ("Z3", cyclic_ring(3)),
        ("Z4", cyclic_ring(4)),
        ("K3", krasner_from_ring(5, [1, 4])),
        ("M3", unary_example()),
        ("left2", left_projection(2)),
        ("left3", left_projection(3)),
        ("N4", noncommutative_ring4()),
        ("Z4+{0,2}", inflate_ring(cyclic_ring(4), [0, 2])),
        ("trivial", one_element(RING_SIGNATURE)),
    ]
    for seed in range(12):
        n = 2 + seed % 3
        signature = RANDOM_SIGNATURES[seed % len(RANDOM_SIGNATURES)]
        corpus.append((f"random-{seed}", random_multialgebra(n, signature, seed)))
    return corpus


CORPUS = named_corpus()


@pytest.fixture(params=[structure for _, structure in CORPUS], ids=[name for name, _ in CORPUS])
def structure(request):
    return request.param


@pytest.fixture(
    params=[structure for _, structure in CORPUS if structure.carrier_size <= 3],
    ids=[name for name, structure in CORPUS if structure.carrier_size <= 3],
)
def small_structure(request):
    return request.param


HYPERRINGS = [
    ("total2", lambda: total_hyperstructure(2)),
    ("total3", lambda: total_hyperstructure(3)),
    ("K3", lambda: krasner_from_ring(5, [1, 4])),
    ("krasner7", lambda: krasner_from_ring(7, [1, 2, 4])),
    ("krasner13", lambda: krasner_from_ring(13, [1, 3, 9])),
]


@pytest.fixture(params=[factory for _, factory in HYPERRINGS], ids=[name for name, _ in HYPERRINGS])
def hyperring(request):
    return request.param()


@pytest.fixture
def k3():
    return krasner_from_ring(5, [1, 4])


@pytest.fixture
def m3():
    return unary_example()


@pytest.fixture
def total2():
    return total_hyperstructure(2)


@pytest.fixture
def z2_group():
    return cyclic_group(2)


@pytest.fixture
def z2():
    return cyclic_ring(2)


@pytest.fixture
def z4():
    return cyclic_ring(4)


@pytest.fixture
def fixture_dir():
    return FIXTURES


@pytest.fixture
def config():
    return Config(max_sat_carrier=3, saturation_cap=5000, max_workers=2)
