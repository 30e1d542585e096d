"""Finite multialgebras, the algebra of nonempty subsets, and factor multialgebras."""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from src.errors import ArityMismatchError, ElementRangeError, PartitionError, UnknownSymbolError
from src.relations.equivalence import EquivRelation

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
DEFAULT_MAX_ARITY = 3


@dataclass(frozen=True)
class Operation:
    """An operation symbol with its arity."""
    symbol: str
    arity: int


@dataclass(frozen=True)
class Signature:
    """Ordered list of operation symbols; may be empty."""
    operations: Tuple[Operation, ...] = ()

    def __post_init__(self):
        operations = tuple(
            op if isinstance(op, Operation) else Operation(str(op[0]), int(op[1])) for op in self.operations
        )
        object.__setattr__(self, "operations", operations)
        seen = set()
        for op in operations:
            if op.arity < 0:
                raise ArityMismatchError(f"negative arity for symbol {op.symbol!r}")
            if op.symbol in seen:
                raise ValueError(f"duplicate operation symbol {op.symbol!r}")
            seen.add(op.symbol)

    @classmethod
    def of(cls, *operations: Tuple[str, int]) -> "Signature":
        """Signature.of(("plus", 2), ("times", 2))"""
        return cls(tuple(Operation(symbol, arity) for symbol, arity in operations))

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(op.symbol for op in self.operations)

    def arity(self, symbol: str) -> int:
        for op in self.operations:
            if op.symbol == symbol:
                return op.arity
        raise UnknownSymbolError(f"unknown operation symbol {symbol!r}")

    def position(self, symbol: str) -> int:
        for index, op in enumerate(self.operations):
            if op.symbol == symbol:
                return index
        raise UnknownSymbolError(f"unknown operation symbol {symbol!r}")

    def restrict(self, symbols: Iterable[str]) -> "Signature":
        wanted = set(symbols)
        for symbol in wanted:
            self.arity(symbol)
        return Signature(tuple(op for op in self.operations if op.symbol in wanted))

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def __str__(self) -> str:
        return ", ".join(f"{op.symbol}/{op.arity}" for op in self.operations)


def tuple_index(args: Sequence[int], carrier_size: int) -> int:
    """Row-major index of an argument tuple, matching itertools.product order."""
    index = 0
    for arg in args:
        index = index * carrier_size + arg
    return index


@dataclass(frozen=True)
class Multialgebra:
    """A finite carrier 0..n-1 with total multioperations into nonempty subsets.

    Tables are dense: the table of a k-ary symbol has n**k entries in
    itertools.product order; a nullary symbol has a single entry.
    """
    carrier_size: int
    signature: Signature
    tables: Tuple[Tuple[Subset, ...], ...]
    name: str = field(default="", compare=False)
    element_names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.carrier_size
        if not isinstance(n, int) or n < 1:
            raise ElementRangeError(f"carrier size must be a positive integer, got {n!r}")
        if len(self.tables) != len(self.signature.operations):
            raise ArityMismatchError(
                f"{len(self.tables)} tables given for {len(self.signature.operations)} operations"
            )
        tables = []
        for op, table in zip(self.signature.operations, self.tables):
            entries = tuple(frozenset(entry) for entry in table)
            if len(entries) != n ** op.arity:
                raise ArityMismatchError(
                    f"table of {op.symbol}/{op.arity} has {len(entries)} entries, expected {n ** op.arity}"
                )
            for position, entry in enumerate(entries):
                if not entry:
                    raise ElementRangeError(f"empty output in table of {op.symbol!r} at entry {position}")
                if min(entry) < 0 or max(entry) >= n:
                    raise ElementRangeError(f"output {sorted(entry)} of {op.symbol!r} outside carrier of size {n}")
            tables.append(entries)
        object.__setattr__(self, "tables", tuple(tables))

        names = tuple(self.element_names) or tuple(str(x) for x in range(n))
        if len(names) != n or len(set(names)) != n:
            raise ElementRangeError(f"element names {names} do not match carrier of size {n}")
        object.__setattr__(self, "element_names", names)

    @classmethod
    def from_functions(
        cls,
        carrier_size: int,
        signature: Signature,
        operations: Mapping[str, Callable[..., Iterable[int]]],
        name: str = "",
        element_names: Sequence[str] = (),
    ) -> "Multialgebra":
        """Tabulate Python callables; each returns the output set (or a single int)."""
        tables = []
        for op in signature.operations:
            if op.symbol not in operations:
                raise UnknownSymbolError(f"no definition for operation {op.symbol!r}")
            fn = operations[op.symbol]
            table = []
            for args in itertools.product(range(carrier_size), repeat=op.arity):
                value = fn(*args)
                table.append(frozenset([value]) if isinstance(value, int) else frozenset(value))
            tables.append(tuple(table))
        return cls(carrier_size, signature, tuple(tables), name=name, element_names=tuple(element_names))

    @classmethod
    def from_tables(
        cls,
        carrier_size: int,
        signature: Signature,
        tables: Mapping[str, Mapping[Tuple[int, ...], Iterable[int]]],
        name: str = "",
        element_names: Sequence[str] = (),
    ) -> "Multialgebra":
        """Build from per-symbol dicts ``{args: outputs}``; every tuple must be present."""
        dense = []
        for op in signature.operations:
            table = tables.get(op.symbol)
            if table is None:
                raise UnknownSymbolError(f"no table for operation {op.symbol!r}")
            entries = []
            for args in itertools.product(range(carrier_size), repeat=op.arity):
                if args not in table:
                    raise ArityMismatchError(f"table of {op.symbol!r} is missing tuple {args}")
                entries.append(frozenset(table[args]))
            dense.append(tuple(entries))
        return cls(carrier_size, signature, tuple(dense), name=name, element_names=tuple(element_names))

    @property
    def elements(self) -> range:
        return range(self.carrier_size)

    @property
    def symbols(self) -> Tuple[str, ...]:
        return self.signature.symbols

    def arity(self, symbol: str) -> int:
        return self.signature.arity(symbol)

    def table(self, symbol: str) -> Tuple[Subset, ...]:
        return self.tables[self.signature.position(symbol)]

    def apply(self, symbol: str, args: Sequence[int]) -> Subset:
        """Table entry f(a_0, ..., a_{k-1})."""
        arity = self.arity(symbol)
        if len(args) != arity:
            raise ArityMismatchError(f"{symbol!r} expects {arity} arguments, got {len(args)}")
        for arg in args:
            if not 0 <= arg < self.carrier_size:
                raise ElementRangeError(f"element {arg} outside carrier of size {self.carrier_size}")
        return self.table(symbol)[tuple_index(args, self.carrier_size)]

    def entries(self, symbol: str) -> Iterator[Tuple[Tuple[int, ...], Subset]]:
        """All (argument tuple, output) pairs of a symbol's table."""
        table = self.table(symbol)
        tuples = itertools.product(range(self.carrier_size), repeat=self.arity(symbol))
        return zip(tuples, table)

    def element_name(self, element: int) -> str:
        return self.element_names[element]

    def subset(self, members: Iterable[int]) -> Subset:
        """Validated SubsetOfCarrier."""
        result = frozenset(members)
        if not result:
            raise ElementRangeError("subsets of the carrier must be nonempty")
        for element in result:
            if not 0 <= element < self.carrier_size:
                raise ElementRangeError(f"element {element} outside carrier of size {self.carrier_size}")
        return result

    def is_universal_algebra(self) -> bool:
        return is_universal_algebra(self)


def lift_op(algebra: Multialgebra, symbol: str, args: Sequence[Subset]) -> Subset:
    """f(A_0, ..., A_{k-1}) in the algebra of nonempty subsets: union over all choices a_i in A_i."""
    arity = algebra.arity(symbol)
    if len(args) != arity:
        raise ArityMismatchError(f"{symbol!r} expects {arity} arguments, got {len(args)}")
    return lift_unchecked(algebra, symbol, [algebra.subset(arg) for arg in args])


def lift_unchecked(algebra: Multialgebra, symbol: str, args: Sequence[Subset]) -> Subset:
    """lift_op without argument validation, for callers that already validated."""
    table = algebra.table(symbol)
    n = algebra.carrier_size
    if all(len(arg) == 1 for arg in args):
        return table[tuple_index([next(iter(arg)) for arg in args], n)]
    result = set()
    for choice in itertools.product(*args):
        result |= table[tuple_index(choice, n)]
    return frozenset(result)


def is_universal_algebra(algebra: Multialgebra) -> bool:
    """True iff every table entry is a singleton."""
    return all(len(entry) == 1 for table in algebra.tables for entry in table)


def _block_name(algebra: Multialgebra, block: Sequence[int]) -> str:
    return ".".join(algebra.element_name(x) for x in block)


def factor(algebra: Multialgebra, relation: EquivRelation, name: Optional[str] = None) -> Multialgebra:
    """The factor multialgebra A/rho; block k of rho becomes element k."""
    if relation.carrier_size != algebra.carrier_size:
        raise PartitionError(
            f"partition of {relation.carrier_size} elements does not match carrier of size {algebra.carrier_size}"
        )
    labels = relation.labels
    m = relation.block_count
    tables = []
    for op in algebra.signature.operations:
        outputs = [set() for _ in range(m ** op.arity)]
        for args, output in algebra.entries(op.symbol):
            index = tuple_index([labels[a] for a in args], m)
            outputs[index].update(labels[b] for b in output)
        tables.append(tuple(frozenset(entry) for entry in outputs))

    block_names = [_block_name(algebra, block) for block in relation.blocks]
    if len(set(block_names)) != m:
        block_names = [f"b{index}" for index in range(m)]
    quotient_name = name if name is not None else (f"{algebra.name}/{relation}" if algebra.name else "")
    return Multialgebra(m, algebra.signature, tuple(tables), name=quotient_name, element_names=tuple(block_names))


def reduct(algebra: Multialgebra, symbols: Iterable[str]) -> Multialgebra:
    """Restriction of the multialgebra to the given operation symbols."""
    signature = algebra.signature.restrict(symbols)
    tables = tuple(algebra.table(op.symbol) for op in signature.operations)
    return Multialgebra(
        algebra.carrier_size, signature, tables, name=algebra.name, element_names=algebra.element_names
    )


def one_element(signature: Signature, name: str = "trivial") -> Multialgebra:
    """The one-element (universal) algebra of the given type."""
    tables = tuple((frozenset([0]),) for _ in signature.operations)
    return Multialgebra(1, signature, tables, name=name)


def singleton_tables(algebra: Multialgebra) -> Dict[str, Tuple[int, ...]]:
    """Single-valued tables of a universal algebra, indexed like the dense tables."""
    if not is_universal_algebra(algebra):
        raise ValueError(f"{algebra.name or 'structure'} is not a universal algebra")
    return {op.symbol: tuple(next(iter(entry)) for entry in algebra.table(op.symbol))
            for op in algebra.signature.operations}
