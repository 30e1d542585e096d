"""Terms, identities and identity sets of the term language."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union


@dataclass(frozen=True)
class Var:
    """The variable x<index>."""
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be nonnegative, got {self.index}")

    def __str__(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class App:
    """Application of an operation symbol to argument terms (no arguments for constants)."""
    symbol: str
    args: Tuple["Term", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({', '.join(str(arg) for arg in self.args)})"


Term = Union[Var, App]


def variables(term: Term) -> Iterator[int]:
    """Indices of the variables occurring in a term (with repetition)."""
    if isinstance(term, Var):
        yield term.index
        return
    for arg in term.args:
        yield from variables(arg)


def term_arity(term: Term) -> int:
    """1 + largest variable index, or 0 for ground terms."""
    return max(variables(term), default=-1) + 1


def symbols_of(term: Term) -> Iterator[Tuple[str, int]]:
    """(symbol, argument count) for every application node."""
    if isinstance(term, App):
        yield term.symbol, len(term.args)
        for arg in term.args:
            yield from symbols_of(arg)


def app(symbol: str, *args: Term) -> App:
    return App(symbol, tuple(args))


def var(index: int) -> Var:
    return Var(index)


class IdentityMode(str, Enum):
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True)
class Identity:
    """q = r (strong) or q ~= r (weak, q ∩ r ≠ ∅)."""
    lhs: Term
    rhs: Term
    mode: IdentityMode = IdentityMode.STRONG
    arity: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "mode", IdentityMode(self.mode))
        object.__setattr__(self, "arity", max(1, term_arity(self.lhs), term_arity(self.rhs)))

    @property
    def is_weak(self) -> bool:
        return self.mode is IdentityMode.WEAK

    def as_strong(self) -> "Identity":
        return Identity(self.lhs, self.rhs, IdentityMode.STRONG)

    def as_weak(self) -> "Identity":
        return Identity(self.lhs, self.rhs, IdentityMode.WEAK)

    def __str__(self) -> str:
        token = "~=" if self.is_weak else "="
        return f"{self.lhs} {token} {self.rhs}"


@dataclass(frozen=True)
class IdentitySet:
    """A finite (possibly empty) list of identities."""
    identities: Tuple[Identity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))

    @classmethod
    def of(cls, *identities: Identity) -> "IdentitySet":
        return cls(tuple(identities))

    def __iter__(self) -> Iterator[Identity]:
        return iter(self.identities)

    def __len__(self) -> int:
        return len(self.identities)

    def __bool__(self) -> bool:
        return bool(self.identities)

    def union(self, other: Iterable[Identity]) -> "IdentitySet":
        merged = list(self.identities)
        for identity in other:
            if identity not in merged:
                merged.append(identity)
        return IdentitySet(tuple(merged))

    def __or__(self, other: "IdentitySet") -> "IdentitySet":
        return self.union(other)

    def __str__(self) -> str:
        return "\n".join(str(identity) for identity in self.identities)


def commutativity(symbol: str) -> Identity:
    return Identity(app(symbol, var(0), var(1)), app(symbol, var(1), var(0)))


def associativity(symbol: str) -> Identity:
    return Identity(
        app(symbol, app(symbol, var(0), var(1)), var(2)),
        app(symbol, var(0), app(symbol, var(1), var(2))),
    )


def idempotency(symbol: str) -> Identity:
    return Identity(app(symbol, var(0), var(0)), var(0))


def trivial_identity() -> Identity:
    """x0 = x0; its I-fundamental relation is the fundamental relation."""
    return Identity(var(0), var(0))


def left_distributivity(times: str, plus: str) -> Identity:
    """x0(x1 + x2) = x0x1 + x0x2"""
    return Identity(
        app(times, var(0), app(plus, var(1), var(2))),
        app(plus, app(times, var(0), var(1)), app(times, var(0), var(2))),
    )


def right_distributivity(times: str, plus: str) -> Identity:
    """(x1 + x2)x0 = x1x0 + x2x0"""
    return Identity(
        app(times, app(plus, var(1), var(2)), var(0)),
        app(plus, app(times, var(1), var(0)), app(times, var(2), var(0))),
    )


def commutativity_identities(plus: str = "plus", times: str = "times") -> IdentitySet:
    """The identity set whose fundamental algebra of a hyperring is a commutative ring."""
    return IdentitySet.of(commutativity(plus), commutativity(times))
