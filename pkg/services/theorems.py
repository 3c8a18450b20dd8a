"""theorems.py - Check each closed-form EDCN claim against its construction and the exact solver"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
from loguru import logger

from config.settings import Settings
from graphs.families import FAMILY_NAMES, Family, FamilyInstance, TWO_PARAMETER, generate_line
from services.constructive import THEOREM_MINIMUM, build_construction, formula_edcn
from services.solver import SolverBudget, SolverOptions, edcn_exact
from services.validator import validate_edc
from utils.exceptions import BudgetExceeded, InvalidParams, SchemeAmbiguous, SchemeNotApplicable

OK, SKIPPED, BUDGET = "ok", "skipped", "budget"


@dataclass
class TheoremVerdict:
    """Outcome of one instance: construction validity, colour count and oracle agreement"""

    spec: FamilyInstance
    formula_value: int
    construction_valid: bool
    construction_k: Optional[int]
    oracle_status: str = SKIPPED
    oracle_value: Optional[int] = None
    oracle_lower: Optional[int] = None
    ambiguities: List[str] = field(default_factory=list)

    @property
    def count_matches(self) -> bool:
        return self.construction_k == self.formula_value

    @property
    def oracle_matches(self) -> Optional[bool]:
        if self.oracle_status != OK:
            return None
        return self.oracle_value == self.formula_value

    @property
    def passed(self) -> bool:
        """Every dimension that was checked passed"""
        return self.construction_valid and self.count_matches and self.oracle_matches is not False

    @property
    def status(self) -> str:
        failures = []
        if not self.construction_valid:
            failures.append("invalid")
        if not self.count_matches:
            failures.append("count")
        if self.oracle_matches is False:
            failures.append("oracle")
        if failures:
            return "+".join(failures)
        return BUDGET if self.oracle_status == BUDGET else OK

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.spec.family.value,
            "params": self.spec.params,
            "construction_valid": self.construction_valid,
            "count_matches": self.count_matches,
            "oracle_value": self.oracle_value,
            "formula_value": self.formula_value,
            "oracle_status": self.oracle_status,
            "ambiguities": list(self.ambiguities),
            "construction_k": self.construction_k,
            "oracle_matches": self.oracle_matches,
            "oracle_lower": self.oracle_lower,
        }

    def csv_row(self) -> Dict[str, Any]:
        return {
            "family": self.spec.family.value,
            "params": self.spec.describe(),
            "formula": self.formula_value,
            "construction_k": self.construction_k,
            "oracle_value": self.oracle_value,
            "status": self.status,
        }


def verify_theorem(spec: FamilyInstance, budget: Optional[SolverBudget] = None,
                   oracle_max_vertices: Optional[int] = None,
                   options: Optional[SolverOptions] = None) -> TheoremVerdict:
    """Run the main scheme, validate it and (size permitting) compare with the exact EDCN"""
    formula = formula_edcn(spec)
    g = generate_line(spec)

    try:
        construction = build_construction(spec)
    except (SchemeAmbiguous, SchemeNotApplicable) as e:
        logger.warning(f"{spec.family.value} {spec.describe()}: construction failed: {e.message}")
        verdict = TheoremVerdict(spec, formula, False, None, ambiguities=[e.message])
    else:
        report = validate_edc(g, construction.coloring)
        verdict = TheoremVerdict(
            spec, formula, report.overall, construction.k,
            ambiguities=list(construction.ambiguities),
        )

    if oracle_max_vertices is not None and g.n > oracle_max_vertices:
        logger.debug(f"Oracle skipped for {spec.describe()}: {g.n} > {oracle_max_vertices} vertices")
    else:
        try:
            result = edcn_exact(g, budget, options)
        except BudgetExceeded as e:
            verdict.oracle_status = BUDGET
            verdict.oracle_lower = e.details["lower"]
        else:
            verdict.oracle_status = OK
            verdict.oracle_value = result.value

    if not verdict.passed:
        logger.warning(f"{spec.family.value} {spec.describe()}: {verdict.status}")
    return verdict


def sweep(family: str, t_min: Optional[int] = None, t_max: Optional[int] = None) -> List[FamilyInstance]:
    """In-range instances of a family; two-parameter families take every (a, b) pair"""
    spec_family = Family(family) if family in FAMILY_NAMES else None
    if spec_family not in THEOREM_MINIMUM:
        raise InvalidParams(family, "no closed-form theorem to check")

    default_min, default_max = Settings.THEOREM_SWEEP.get(family, (THEOREM_MINIMUM[spec_family], None))
    low = max(t_min if t_min is not None else default_min, THEOREM_MINIMUM[spec_family])
    high = t_max if t_max is not None else default_max
    if high is None:
        raise InvalidParams(family, "--t-max is required for this family")

    if spec_family in TWO_PARAMETER:
        return [
            FamilyInstance.of(family, a=a, b=b)
            for a in range(low, high + 1) for b in range(low, high + 1)
        ]
    return [FamilyInstance.of(family, t=t) for t in range(low, high + 1)]


def run_checks(instances: Iterable[FamilyInstance], budget: Optional[SolverBudget] = None,
               oracle_max_vertices: Optional[int] = None,
               options: Optional[SolverOptions] = None) -> List[TheoremVerdict]:
    verdicts = [verify_theorem(spec, budget, oracle_max_vertices, options) for spec in instances]
    failed = sum(1 for verdict in verdicts if not verdict.passed)
    logger.info(f"Checked {len(verdicts)} instances, {failed} with failures")
    return verdicts


def run_table(families: Optional[List[str]] = None, budget: Optional[SolverBudget] = None,
              oracle_max_vertices: Optional[int] = None,
              options: Optional[SolverOptions] = None) -> List[TheoremVerdict]:
    """Verdicts for the configured sweep of every theorem family"""
    verdicts: List[TheoremVerdict] = []
    for family in families or Settings.sweep_families():
        logger.info(f"Sweeping {family}")
        verdicts.extend(run_checks(sweep(family), budget, oracle_max_vertices, options))
    return verdicts


def verdicts_frame(verdicts: List[TheoremVerdict]) -> pd.DataFrame:
    """One CSV row per verdict, in the fixed column order"""
    return pd.DataFrame([verdict.csv_row() for verdict in verdicts], columns=Settings.CSV_COLUMNS)
