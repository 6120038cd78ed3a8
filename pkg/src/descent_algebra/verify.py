"""
Named identity suites, each sweeping one family of exact identities at a rank
and returning counterexamples as data.  The suite names are part of the CLI
contract; everything they check is an equality of integers or of sparse
integer vectors, so a clean run really is a proof by exhaustion at that rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .burnside import commuting_square_check, intertwining_report
from .class_algebra import (
    Equivalence,
    class_basis,
    factorization_check,
    well_definedness_report,
)
from .cosets import double_coset_reps, min_coset_reps
from .errors import DecompositionError, InvalidSubset
from .serialize import label_dict, subset_display, vector_rows
from .solomon import (
    GroupAlgebraElement,
    convolve,
    solomon_decompose,
    structure_table,
    x_of,
    x_parabolic,
)
from .transfer import TransferContext, restrict_label, restrict_label_alt
from .weyl import SimpleSubset, subsets_of

SUITE_NAMES = ("solomon", "lemma22", "theorem21", "well-defined", "theorem25")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    rank: int
    equivalence: Equivalence
    cases: int
    counterexamples: tuple[dict[str, Any], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _all_subsets(rank: int) -> list[SimpleSubset]:
    return subsets_of(SimpleSubset.full(rank))


def _suite_solomon(rank: int, equivalence: Equivalence) -> SuiteResult:
    """Convolution agrees with the structure-constant expansion, the
    independent decomposition agrees with both, and the masses balance."""
    bad: list[dict[str, Any]] = []
    cases = 0
    subsets = _all_subsets(rank)
    for left in subsets:
        x_left = x_of(left)
        for right in subsets:
            cases += 1
            product = convolve(x_left, x_of(right))
            table = structure_table(left, right)
            expansion = GroupAlgebraElement.zero(rank)
            for inner, count in table.items():
                expansion = expansion + x_of(inner).scale(count)
            entry = {"left": subset_display(left), "right": subset_display(right)}
            if product != expansion:
                bad.append({**entry, "identity": "convolution-vs-constants"})
                continue
            try:
                decomposition = solomon_decompose(left, right)
            except DecompositionError as exc:
                bad.append({**entry, "identity": "decomposition", "detail": str(exc)})
                continue
            if decomposition != dict(table):
                bad.append({**entry, "identity": "decomposition-vs-constants"})
            mass = sum(count * len(min_coset_reps(inner)) for inner, count in table.items())
            if mass != len(min_coset_reps(left)) * len(min_coset_reps(right)):
                bad.append({**entry, "identity": "mass-balance"})
            if sum(table.values()) != len(double_coset_reps(left, right)):
                bad.append({**entry, "identity": "double-coset-count"})
    return SuiteResult("solomon", rank, equivalence, cases, tuple(bad))


def _suite_lemma22(rank: int, equivalence: Equivalence) -> SuiteResult:
    """Coset sums factor through any enclosing context: x_K = x_J · x_K^J."""
    bad: list[dict[str, Any]] = []
    cases = 0
    for outer in _all_subsets(rank):
        for inner in subsets_of(outer):
            cases += 1
            if x_of(inner) != convolve(x_of(outer), x_parabolic(inner, outer)):
                bad.append(
                    {
                        "identity": "coset-sum-factorization",
                        "outer": subset_display(outer),
                        "inner": subset_display(inner),
                    }
                )
    return SuiteResult("lemma22", rank, equivalence, cases, tuple(bad))


def _suite_theorem21(rank: int, equivalence: Equivalence) -> SuiteResult:
    """Global structure constants factor through every enclosing context."""
    bad: list[dict[str, Any]] = []
    cases = 0
    subsets = _all_subsets(rank)
    for context in subsets:
        for inner in subsets_of(context):
            for outer in subsets:
                cases += 1
                report = factorization_check(outer, inner, context)
                for row in report.rows:
                    if not row.ok:
                        bad.append(
                            {
                                "identity": "constant-factorization",
                                "outer": subset_display(outer),
                                "inner": subset_display(inner),
                                "context": subset_display(context),
                                "target": subset_display(row.inner),
                                "direct": row.direct,
                                "factored": row.factored,
                            }
                        )
    return SuiteResult("theorem21", rank, equivalence, cases, tuple(bad))


def _suite_well_defined(
    rank: int, equivalence: Equivalence, context: SimpleSubset | None = None
) -> SuiteResult:
    ctx = context if context is not None else SimpleSubset.full(rank)
    report = well_definedness_report(ctx, equivalence)
    bad = tuple(
        {
            "identity": "representative-independence",
            "context": subset_display(ctx),
            "left": label_dict(item.left),
            "right": label_dict(item.right),
            "left_rep": subset_display(item.left_rep),
            "right_rep": subset_display(item.right_rep),
            "got": vector_rows(item.vector),
            "expected": vector_rows(item.expected),
        }
        for item in report.counterexamples
    )
    return SuiteResult("well-defined", rank, equivalence, report.pairs_checked, bad)


def _suite_theorem25(rank: int, equivalence: Equivalence) -> SuiteResult:
    """Both transfer squares commute, the two restriction forms agree, and the
    relabelling map intertwines the two products."""
    bad: list[dict[str, Any]] = []
    cases = 0
    subsets = _all_subsets(rank)
    for upper in subsets:
        for lower in subsets_of(upper):
            ctx = TransferContext(lower, upper)
            square = commuting_square_check(ctx, equivalence)
            cases += square.cases
            for failure in square.failures:
                bad.append(
                    {
                        "identity": f"{failure.square}-square",
                        "lower": subset_display(lower),
                        "upper": subset_display(upper),
                        "label": label_dict(failure.label),
                        "via_transfer": vector_rows(failure.via_transfer),
                        "via_burnside": vector_rows(failure.via_burnside),
                    }
                )
            for label in class_basis(upper, equivalence):
                cases += 1
                if restrict_label(label, ctx) != restrict_label_alt(label, ctx):
                    bad.append(
                        {
                            "identity": "restriction-two-forms",
                            "lower": subset_display(lower),
                            "upper": subset_display(upper),
                            "label": label_dict(label),
                        }
                    )
    for context in subsets:
        report = intertwining_report(context, equivalence)
        cases += report.cases
        if not report.ok:
            bad.append(
                {
                    "identity": "product-intertwining",
                    "context": subset_display(context),
                    "same_order_ok": report.same_order_ok,
                    "swapped_order_ok": report.swapped_order_ok,
                }
            )
    return SuiteResult("theorem25", rank, equivalence, cases, tuple(bad))


def run_suite(
    name: str,
    rank: int,
    equivalence: Equivalence = Equivalence.FULL,
    context: SimpleSubset | None = None,
) -> SuiteResult:
    if name == "solomon":
        return _suite_solomon(rank, equivalence)
    if name == "lemma22":
        return _suite_lemma22(rank, equivalence)
    if name == "theorem21":
        return _suite_theorem21(rank, equivalence)
    if name == "well-defined":
        return _suite_well_defined(rank, equivalence, context)
    if name == "theorem25":
        return _suite_theorem25(rank, equivalence)
    raise InvalidSubset(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")


def run_suites(
    name: str,
    rank: int,
    equivalence: Equivalence = Equivalence.FULL,
    context: SimpleSubset | None = None,
) -> list[SuiteResult]:
    names: Iterable[str] = SUITE_NAMES if name == "all" else (name,)
    return [run_suite(n, rank, equivalence, context) for n in names]
