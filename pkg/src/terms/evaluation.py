"""Term functions on the algebra of nonempty subsets, and identity satisfaction."""
import itertools
from typing import Dict, Iterator, Sequence, Tuple

from src.core.multialgebra import Multialgebra, Subset, lift_unchecked
from src.errors import ArityMismatchError, UnknownSymbolError
from src.terms.syntax import Identity, Term, Var, symbols_of, term_arity


def check_well_formed(algebra: Multialgebra, term: Term):
    """Raise if the term uses a symbol outside the signature or with the wrong arity."""
    for symbol, count in symbols_of(term):
        if symbol not in algebra.signature:
            raise UnknownSymbolError(f"unknown operation symbol {symbol!r} in term {term}")
        arity = algebra.arity(symbol)
        if arity != count:
            raise ArityMismatchError(f"{symbol!r} has arity {arity} but is applied to {count} arguments in {term}")


class TermEvaluator:
    """Evaluates terms of one algebra, memoizing per (term node, environment)."""

    def __init__(self, algebra: Multialgebra):
        self.algebra = algebra
        self._cache: Dict[Tuple[Term, Tuple[Subset, ...]], Subset] = {}

    def evaluate(self, term: Term, env: Tuple[Subset, ...]) -> Subset:
        key = (term, env)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if isinstance(term, Var):
            value = env[term.index]
        else:
            args = [self.evaluate(arg, env) for arg in term.args]
            value = lift_unchecked(self.algebra, term.symbol, args)
        self._cache[key] = value
        return value


def eval_term(algebra: Multialgebra, term: Term, env: Sequence[Subset]) -> Subset:
    """Value of the term function on the given subsets (variables select env entries)."""
    check_well_formed(algebra, term)
    needed = term_arity(term)
    if len(env) < needed:
        raise ArityMismatchError(f"term {term} needs {needed} arguments, environment has {len(env)}")
    checked = tuple(algebra.subset(subset) for subset in env)
    return TermEvaluator(algebra).evaluate(term, checked)


def singleton_environments(algebra: Multialgebra, arity: int) -> Iterator[Tuple[Subset, ...]]:
    """Every tuple ({a_0}, ..., {a_{arity-1}}) of singletons."""
    singletons = [frozenset([a]) for a in algebra.elements]
    return itertools.product(singletons, repeat=arity)


def identity_values(algebra: Multialgebra, identity: Identity) -> Iterator[Tuple[Tuple[int, ...], Subset, Subset]]:
    """(a, q(a), r(a)) for every tuple a of elements."""
    check_well_formed(algebra, identity.lhs)
    check_well_formed(algebra, identity.rhs)
    evaluator = TermEvaluator(algebra)
    for env in singleton_environments(algebra, identity.arity):
        args = tuple(next(iter(subset)) for subset in env)
        yield args, evaluator.evaluate(identity.lhs, env), evaluator.evaluate(identity.rhs, env)


def identity_counterexample(algebra: Multialgebra, identity: Identity):
    """First argument tuple violating the identity, or None."""
    for args, left, right in identity_values(algebra, identity):
        if identity.is_weak:
            if not left & right:
                return args
        elif left != right:
            return args
    return None


def check_identity(algebra: Multialgebra, identity: Identity) -> bool:
    """Strong: q(a) = r(a) for all a; weak: q(a) ∩ r(a) ≠ ∅ for all a."""
    return identity_counterexample(algebra, identity) is None


def satisfied_weakly(algebra: Multialgebra, identity: Identity) -> bool:
    """At least weakly satisfied (the strong form implies the weak one)."""
    return check_identity(algebra, identity.as_weak())