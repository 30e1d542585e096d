"""Fixture factories: total hyperstructures, Krasner quotients, rings, and random multialgebras."""
import logging
import random
from math import gcd
from typing import Callable, Iterable, List, Optional, Sequence

from src.core.multialgebra import DEFAULT_MAX_ARITY, Multialgebra, Signature, is_universal_algebra
from src.errors import AxiomError, ElementRangeError
from src.hyperstructures.axioms import require_binary

logger = logging.getLogger(__name__)

RING_SIGNATURE = Signature.of(("plus", 2), ("times", 2))


def total_hyperstructure(n: int, symbols: Sequence[str] = ("plus", "times")) -> Multialgebra:
    """Every binary multioperation returns the whole carrier."""
    carrier = frozenset(range(n))
    signature = Signature.of(*((symbol, 2) for symbol in symbols))
    return Multialgebra.from_functions(
        n, signature, {symbol: (lambda x, y: carrier) for symbol in symbols}, name=f"total({n})"
    )


def from_group(n: int, operation: Callable[[int, int], int], symbol: str = "plus", name: str = "") -> Multialgebra:
    return Multialgebra.from_functions(n, Signature.of((symbol, 2)), {symbol: operation}, name=name)


def from_ring(
    n: int,
    plus: Callable[[int, int], int],
    times: Callable[[int, int], int],
    name: str = "",
) -> Multialgebra:
    return Multialgebra.from_functions(n, RING_SIGNATURE, {"plus": plus, "times": times}, name=name)


def cyclic_group(m: int, symbol: str = "plus") -> Multialgebra:
    """Z_m under addition."""
    return from_group(m, lambda x, y: (x + y) % m, symbol=symbol, name=f"Z{m}")


def cyclic_ring(m: int) -> Multialgebra:
    """Z_m with addition and multiplication."""
    return from_ring(m, lambda x, y: (x + y) % m, lambda x, y: (x * y) % m, name=f"Z{m}")


def _validate_unit_subgroup(modulus: int, subgroup: Iterable[int]) -> List[int]:
    units = sorted({g % modulus for g in subgroup})
    if not units:
        raise AxiomError("the unit subgroup must be nonempty")
    for g in units:
        if gcd(g, modulus) != 1:
            raise AxiomError(f"{g} is not a unit modulo {modulus}")
    members = set(units)
    for g in units:
        for h in units:
            if (g * h) % modulus not in members:
                raise AxiomError(f"{sorted(members)} is not closed under multiplication modulo {modulus}")
        if pow(g, -1, modulus) not in members:
            raise AxiomError(f"inverse of {g} modulo {modulus} is missing from {sorted(members)}")
    return units


def krasner_from_ring(modulus: int, subgroup: Iterable[int]) -> Multialgebra:
    """Quotient hyperring of Z_m by a subgroup G of its units.

    Classes are the orbits xG numbered by their least element; class(x) + class(y) is the set of
    classes of gx + hy for g, h in G, and multiplication is single-valued.
    """
    if modulus < 2:
        raise ElementRangeError(f"modulus must be at least 2, got {modulus}")
    units = _validate_unit_subgroup(modulus, subgroup)
    orbit_of = {}
    orbits: List[List[int]] = []
    for x in range(modulus):
        if x in orbit_of:
            continue
        orbit = sorted({(g * x) % modulus for g in units})
        for member in orbit:
            orbit_of[member] = len(orbits)
        orbits.append(orbit)

    def plus(a: int, b: int):
        x, y = orbits[a][0], orbits[b][0]
        return {orbit_of[(g * x + h * y) % modulus] for g in units for h in units}

    def times(a: int, b: int):
        return orbit_of[(orbits[a][0] * orbits[b][0]) % modulus]

    logger.debug(f"Krasner quotient of Z{modulus} by {units}: {len(orbits)} classes")
    return Multialgebra.from_functions(
        len(orbits),
        RING_SIGNATURE,
        {"plus": plus, "times": times},
        name=f"krasner({modulus},{{{','.join(str(g) for g in units)}}})",
        element_names=[f"w{index}" for index in range(len(orbits))],
    )


def inflate_ring(ring: Multialgebra, ideal: Iterable[int]) -> Multialgebra:
    """Hyperring x+y = (x+y)+J, x*y = xy+J for a two-sided ideal J of a ring."""
    require_binary(ring, "plus", "times")
    if not is_universal_algebra(ring):
        raise AxiomError("inflate_ring needs a single-valued ring")
    members = frozenset(ideal)
    if not members or not all(0 <= i < ring.carrier_size for i in members):
        raise ElementRangeError(f"ideal {sorted(members)} outside carrier of size {ring.carrier_size}")

    def add(x: int, y: int) -> int:
        return next(iter(ring.apply("plus", (x, y))))

    def coset(value: int):
        return {add(value, i) for i in members}

    return Multialgebra.from_functions(
        ring.carrier_size,
        RING_SIGNATURE,
        {
            "plus": lambda x, y: coset(add(x, y)),
            "times": lambda x, y: coset(next(iter(ring.apply("times", (x, y))))),
        },
        name=f"{ring.name}+{{{','.join(str(i) for i in sorted(members))}}}",
        element_names=ring.element_names,
    )


def noncommutative_ring4() -> Multialgebra:
    """Ring on F2 x F2 with (a1, a2)(b1, b2) = (a1 b1, a2 b1); element k encodes (k & 1, k >> 1)."""

    def pair(k: int):
        return k & 1, k >> 1

    def encode(a1: int, a2: int) -> int:
        return a1 | (a2 << 1)

    def times(x: int, y: int) -> int:
        (a1, a2), (b1, _) = pair(x), pair(y)
        return encode(a1 * b1 % 2, a2 * b1 % 2)

    return from_ring(4, lambda x, y: x ^ y, times, name="N4")


def left_projection(n: int, symbols: Sequence[str] = ("plus", "times")) -> Multialgebra:
    """x∘y = {x} for every symbol."""
    signature = Signature.of(*((symbol, 2) for symbol in symbols))
    return Multialgebra.from_functions(
        n, signature, {symbol: (lambda x, y: x) for symbol in symbols}, name=f"left({n})"
    )


def unary_example() -> Multialgebra:
    """M3: u(0) = {0, 1}, u(1) = {1}, u(2) = {2}."""
    outputs = {0: {0, 1}, 1: {1}, 2: {2}}
    return Multialgebra.from_functions(3, Signature.of(("u", 1)), {"u": outputs.__getitem__}, name="M3")


class RandomStructureGenerator:
    """Seeded random multialgebras; equal seeds give equal structures."""

    def __init__(self, seed: int = 0, singleton_bias: float = 0.5):
        self.rng = random.Random(seed)
        self.singleton_bias = singleton_bias

    def _output(self, n: int) -> List[int]:
        if self.rng.random() < self.singleton_bias:
            return [self.rng.randrange(n)]
        size = self.rng.randint(1, n)
        return self.rng.sample(range(n), size)

    def generate(self, n: int, signature: Signature, name: Optional[str] = None) -> Multialgebra:
        for op in signature.operations:
            if op.arity > DEFAULT_MAX_ARITY:
                raise ElementRangeError(f"arity {op.arity} of {op.symbol!r} exceeds {DEFAULT_MAX_ARITY}")
        tables = tuple(
            tuple(frozenset(self._output(n)) for _ in range(n ** op.arity)) for op in signature.operations
        )
        return Multialgebra(n, signature, tables, name=name or f"random({n})")


def random_multialgebra(n: int, signature: Signature, seed: int = 0) -> Multialgebra:
    return RandomStructureGenerator(seed).generate(n, signature, name=f"random({n},seed={seed})")
