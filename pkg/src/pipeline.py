"""Command orchestration: load inputs, run the library, assemble reports and exit codes."""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel

from src.category.colimits import check_colimit_preservation
from src.config import Config
from src.core.multialgebra import Multialgebra, Signature, factor
from src.errors import ElementRangeError, GuardExceededError, MultialgebraError, StructureFileError
from src.generators.structures import (
    cyclic_group,
    cyclic_ring,
    inflate_ring,
    krasner_from_ring,
    left_projection,
    random_multialgebra,
    total_hyperstructure,
)
from src.hyperstructures.axioms import check_axioms, ring_report
from src.hyperstructures.commutative import alpha_star_hyperring
from src.relations.closure import alpha_star_I, fundamental, in_Eua, in_Eua_condition_c, relation_RI
from src.relations.equivalence import EquivRelation
from src.relations.oracles import alpha_I_via_polynomials, meet_of_Eua_containing
from src.schemas import (
    AxiomReportModel,
    ColimitReport,
    HyperringAlphaReport,
    OracleCheckReport,
    PartitionReport,
    StructureReport,
    ValidationReport,
)
from src.storage.diagram_file import load_diagram, load_identities
from src.storage.structure_file import dump_structure, load_structure
from src.terms.syntax import IdentitySet
from src.workers.pool import run_oracle_tasks

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

EXIT_OK = 0
EXIT_THEOREM = 3

GEN_KINDS = ("total", "krasner", "cyclic-group", "cyclic-ring", "inflated-ring", "left-projection", "random")


@dataclass
class CommandResult:
    report: BaseModel
    exit_code: int = EXIT_OK


def _blocks(algebra: Multialgebra, relation: EquivRelation) -> List[List[str]]:
    return [[algebra.element_name(x) for x in block] for block in relation.blocks]


def _parse_int_list(text: str, what: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ElementRangeError(f"{what} must be a comma-separated list of integers, got {text!r}") from e


def _parse_signature(text: str) -> Signature:
    """'plus/2,times/2' -> Signature."""
    operations = []
    for item in text.split(","):
        symbol, _, arity = item.strip().partition("/")
        if not symbol or not arity.isdigit():
            raise ElementRangeError(f"signature entries must look like 'symbol/arity', got {item.strip()!r}")
        operations.append((symbol, int(arity)))
    return Signature.of(*operations)


class CommandPipeline:
    """Runs one CLI command against the library under a fixed configuration."""

    def __init__(self, config: Config):
        self.config = config

    def _load(self, path: PathLike) -> Multialgebra:
        return load_structure(path, self.config.max_arity)

    def _identities(self, path: Optional[PathLike]) -> IdentitySet:
        return load_identities(path) if path else IdentitySet()

    def validate(self, path: PathLike) -> CommandResult:
        try:
            algebra = self._load(path)
        except StructureFileError as e:
            logger.info(f"{path} is invalid: {e}")
            return CommandResult(ValidationReport(source=str(path), valid=False, diagnostics=[str(e)]), e.exit_code)
        report = ValidationReport(
            source=str(path),
            valid=True,
            name=algebra.name,
            carrier_size=algebra.carrier_size,
            signature=str(algebra.signature),
            universal_algebra=algebra.is_universal_algebra(),
        )
        return CommandResult(report)

    def _oracle_checks(
        self, algebra: Multialgebra, identities: IdentitySet, relation: EquivRelation
    ) -> List[OracleCheckReport]:
        seed = relation_RI(algebra, identities) if identities else None
        tasks: List[Tuple[str, Callable[[], EquivRelation]]] = [
            ("enumeration", lambda: meet_of_Eua_containing(algebra, seed, max_carrier=self.config.max_enum_carrier)),
            ("polynomials", lambda: alpha_I_via_polynomials(
                algebra, identities, max_carrier=self.config.max_sat_carrier, cap=self.config.saturation_cap
            )),
        ]
        checks = []
        for name, status, value in run_oracle_tasks(self.config, tasks):
            if status == "error":
                if isinstance(value, GuardExceededError):
                    checks.append(OracleCheckReport(name=name, status="skipped", detail=str(value)))
                    continue
                raise value
            agree = value == relation
            if not agree:
                logger.warning(f"Oracle {name} diverges on {algebra.name or 'structure'}: {value} != {relation}")
            checks.append(OracleCheckReport(
                name=name, status="agree" if agree else "diverge", expected=str(value), actual=str(relation)
            ))

        # the output-set check and the componentwise check must both accept the result
        accepted = in_Eua(algebra, relation) and in_Eua_condition_c(algebra, relation)
        checks.append(OracleCheckReport(
            name="strongly-regular",
            status="agree" if accepted else "diverge",
            expected="true",
            actual=str(accepted).lower(),
        ))
        return checks

    def fundamental(self, path: PathLike, identities_path: Optional[PathLike] = None, oracle: bool = False) -> CommandResult:
        algebra = self._load(path)
        identities = self._identities(identities_path)
        relation = alpha_star_I(algebra, identities) if identities else fundamental(algebra)
        logger.info(f"{'alpha*_I' if identities else 'alpha*'} of {algebra.name or path}: {relation}")
        checks = self._oracle_checks(algebra, identities, relation) if oracle else []
        report = PartitionReport(
            source=str(path),
            name=algebra.name,
            carrier_size=algebra.carrier_size,
            identities=[str(identity) for identity in identities],
            relation=str(relation),
            blocks=_blocks(algebra, relation),
            block_count=relation.block_count,
            factor_is_universal=factor(algebra, relation).is_universal_algebra(),
            oracle=checks,
        )
        return CommandResult(report, EXIT_THEOREM if report.diverged else EXIT_OK)

    def axioms(self, path: PathLike) -> CommandResult:
        algebra = self._load(path)
        report = check_axioms(algebra)
        return CommandResult(AxiomReportModel(source=str(path), name=algebra.name, **report.as_dict()))

    def hyperring_alpha(self, path: PathLike, strategy: str = "def1", s_max: Optional[int] = None) -> CommandResult:
        algebra = self._load(path)
        result = alpha_star_hyperring(algebra, strategy, s_max or self.config.s_max)
        report = HyperringAlphaReport(
            source=str(path),
            name=algebra.name,
            strategy=result.strategy,
            s_max=result.s_max,
            converged=result.converged,
            converged_at=result.converged_at,
            relation=str(result.relation),
            target=str(result.target),
            pair_count=result.pair_count,
            factor_is_commutative_ring=ring_report(factor(algebra, result.relation)).is_commutative_ring,
        )
        return CommandResult(report)

    def factor(self, path: PathLike, partition: str) -> CommandResult:
        algebra = self._load(path)
        relation = EquivRelation.parse(partition, algebra.carrier_size)
        quotient = factor(algebra, relation)
        report = StructureReport(
            command="factor",
            name=quotient.name,
            carrier_size=quotient.carrier_size,
            parameters={"partition": str(relation)},
            structure=dump_structure(quotient),
        )
        return CommandResult(report)

    def colimit(self, path: PathLike, identities_path: Optional[PathLike] = None) -> CommandResult:
        diagram = load_diagram(path, self.config.max_arity)
        identities = self._identities(identities_path)
        preservation = check_colimit_preservation(diagram, identities)
        isomorphism = preservation.is_isomorphism
        if not (isomorphism and preservation.top_isomorphic):
            logger.warning(f"Colimit check failed on {path}: isomorphism={isomorphism}, top={preservation.top_isomorphic}")
        report = ColimitReport(
            source=str(path),
            objects=diagram.size,
            top=diagram.maximum(),
            colimit_size=preservation.colimit.object.carrier_size,
            top_isomorphic=preservation.top_isomorphic,
            identities=[str(identity) for identity in identities],
            fundamental_of_colimit_size=preservation.left.carrier_size,
            colimit_of_fundamentals_size=preservation.right.carrier_size,
            comparison=list(preservation.comparison.mapping),
            inverse=list(preservation.inverse.mapping),
            is_isomorphism=isomorphism,
            colimit_structure=dump_structure(preservation.colimit.object),
        )
        exit_code = EXIT_OK if isomorphism and preservation.top_isomorphic else EXIT_THEOREM
        return CommandResult(report, exit_code)

    def gen(self, kind: str, params: Dict[str, Optional[str]]) -> CommandResult:
        algebra = self.generate(kind, params)
        report = StructureReport(
            command="gen",
            name=algebra.name,
            carrier_size=algebra.carrier_size,
            parameters={key: value for key, value in sorted(params.items()) if value is not None},
            structure=dump_structure(algebra),
        )
        return CommandResult(report)

    def generate(self, kind: str, params: Dict[str, Optional[str]]) -> Multialgebra:
        """Build a fixture structure; ``params`` holds the raw CLI strings."""

        def size(default: int) -> int:
            value = int(params.get("n") or default)
            if value < 1:
                raise ElementRangeError(f"carrier size must be positive, got {value}")
            return value

        if kind == "total":
            return total_hyperstructure(size(2))
        if kind == "krasner":
            modulus = int(params.get("modulus") or 5)
            return krasner_from_ring(modulus, _parse_int_list(params.get("subgroup") or "1,4", "subgroup"))
        if kind == "cyclic-group":
            return cyclic_group(size(4))
        if kind == "cyclic-ring":
            return cyclic_ring(size(4))
        if kind == "inflated-ring":
            return inflate_ring(cyclic_ring(size(4)), _parse_int_list(params.get("ideal") or "0", "ideal"))
        if kind == "left-projection":
            return left_projection(size(3))
        if kind == "random":
            signature = _parse_signature(params.get("signature") or "plus/2,times/2")
            seed = int(params["seed"]) if params.get("seed") is not None else self.config.seed
            return random_multialgebra(size(3), signature, seed)
        raise MultialgebraError(f"unknown generator {kind!r}, expected one of {', '.join(GEN_KINDS)}")

