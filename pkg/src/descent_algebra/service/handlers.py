"""
The service's command implementations: pydantic request in, pydantic response
out.  The FastAPI app and the CLI's in-process mode both call these directly,
so the two surfaces cannot drift apart.
"""

from __future__ import annotations

from .. import __version__
from ..class_algebra import (
    ClassVector,
    Equivalence,
    class_basis,
    class_label,
    class_product,
    parabolic_class_product,
)
from ..serialize import (
    label_dict,
    parse_subset,
    permutation_images,
    subset_display,
    subset_indices,
    vector_rows,
)
from ..solomon import parabolic_structure_table, structure_table
from ..cosets import min_coset_reps_parabolic
from ..transfer import TransferContext, induce, restrict, restrict_alt
from ..verify import run_suites
from ..weyl import SimpleSubset, length, rank_cap, subsets_of
from .schemas import (
    ClassTableRequest,
    ConstantsRequest,
    HealthResponse,
    InduceRequest,
    ParabolicTableRequest,
    RepsRequest,
    RestrictRequest,
    SuiteModel,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)


def handle_reps(request: RepsRequest) -> TableResponse:
    target = parse_subset(request.target, request.rank)
    context = parse_subset(request.context, request.rank)
    reps = min_coset_reps_parabolic(target, context).reps
    rows = [
        {"permutation": permutation_images(w), "length": length(w)} for w in reps
    ]
    return TableResponse(
        rank=request.rank,
        command="reps",
        equivalence=request.equivalence,
        params={"target": subset_display(target), "context": subset_display(context)},
        columns=["permutation", "length"],
        rows=rows,
    )


def handle_constants(request: ConstantsRequest) -> TableResponse:
    left = parse_subset(request.j, request.rank)
    right = parse_subset(request.k, request.rank)
    if request.context is None:
        table = structure_table(left, right)
        context_display = None
    else:
        context = parse_subset(request.context, request.rank)
        table = parabolic_structure_table(left, right, context)
        context_display = subset_display(context)
    rows = [
        {"subset": subset_indices(inner), "value": table.get(inner, 0)}
        for inner in subsets_of(right)
    ]
    return TableResponse(
        rank=request.rank,
        command="constants",
        equivalence=request.equivalence,
        params={
            "j": subset_display(left),
            "k": subset_display(right),
            "context": context_display,
        },
        columns=["subset", "value"],
        rows=rows,
    )


def _table_rows(context: SimpleSubset, equivalence: Equivalence) -> list[dict]:
    rows = []
    for a in class_basis(context, equivalence):
        for b in class_basis(context, equivalence):
            if context.is_full:
                product = class_product(a, b)
            else:
                product = parabolic_class_product(a, b, context)
            rows.append(
                {"left": label_dict(a), "right": label_dict(b), "product": vector_rows(product)}
            )
    return rows


def handle_class_table(request: ClassTableRequest) -> TableResponse:
    context = SimpleSubset.full(request.rank)
    equivalence = Equivalence(request.equivalence)
    return TableResponse(
        rank=request.rank,
        command="class-table",
        equivalence=request.equivalence,
        params={},
        columns=["left", "right", "product"],
        rows=_table_rows(context, equivalence),
        basis=[label_dict(label) for label in class_basis(context, equivalence)],
    )


def handle_parabolic_table(request: ParabolicTableRequest) -> TableResponse:
    context = parse_subset(request.j, request.rank)
    equivalence = Equivalence(request.equivalence)
    return TableResponse(
        rank=request.rank,
        command="parabolic-table",
        equivalence=request.equivalence,
        params={"j": subset_display(context)},
        columns=["left", "right", "product"],
        rows=_table_rows(context, equivalence),
        basis=[label_dict(label) for label in class_basis(context, equivalence)],
    )


def handle_induce(request: InduceRequest) -> TableResponse:
    lower = parse_subset(request.lower, request.rank)
    upper = parse_subset(request.upper, request.rank)
    target = parse_subset(request.k, request.rank)
    equivalence = Equivalence(request.equivalence)
    ctx = TransferContext(lower, upper)
    vector = induce(
        ClassVector.basis_vector(class_label(target, lower, equivalence)), ctx
    )
    return TableResponse(
        rank=request.rank,
        command="induce",
        equivalence=request.equivalence,
        params={
            "lower": subset_display(lower),
            "upper": subset_display(upper),
            "k": subset_display(target),
        },
        columns=["partition", "representative", "coefficient"],
        rows=vector_rows(vector),
    )


def handle_restrict(request: RestrictRequest) -> TableResponse:
    lower = parse_subset(request.lower, request.rank)
    upper = parse_subset(request.upper, request.rank)
    target = parse_subset(request.k, request.rank)
    equivalence = Equivalence(request.equivalence)
    ctx = TransferContext(lower, upper)
    basis = ClassVector.basis_vector(class_label(target, upper, equivalence))
    vector = restrict_alt(basis, ctx) if request.alt else restrict(basis, ctx)
    return TableResponse(
        rank=request.rank,
        command="restrict",
        equivalence=request.equivalence,
        params={
            "lower": subset_display(lower),
            "upper": subset_display(upper),
            "k": subset_display(target),
            "alt": request.alt,
        },
        columns=["partition", "representative", "coefficient"],
        rows=vector_rows(vector),
    )


def handle_verify(request: VerifyRequest) -> VerifyResponse:
    context = (
        parse_subset(request.context, request.rank)
        if request.context is not None
        else None
    )
    results = run_suites(
        request.suite, request.rank, Equivalence(request.equivalence), context
    )
    suites = [
        SuiteModel(
            name=result.name,
            ok=result.ok,
            cases=result.cases,
            counterexamples=list(result.counterexamples),
        )
        for result in results
    ]
    return VerifyResponse(
        rank=request.rank,
        command="verify",
        equivalence=request.equivalence,
        ok=all(result.ok for result in results),
        suites=suites,
    )


def handle_health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__, rank_cap=rank_cap())
