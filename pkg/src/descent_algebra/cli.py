"""
Thin client for the table service.

Every subcommand builds the same request model the HTTP endpoints accept.  By
default the request is served in-process; pass ``--server`` to send it to a
running instance instead (start one with ``descent serve``).  Output goes to
stdout, diagnostics to stderr.

Exit codes: 0 success; 1 a verify suite found counterexamples; 2 bad usage or
unparseable arguments; 3 rank over the enumeration cap; 4 transport failure.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Callable

import click
import httpx
from pydantic import BaseModel, ValidationError

from .errors import DescentAlgebraError
from .service.app import error_status
from .service import handlers
from .service.schemas import (
    ClassTableRequest,
    ConstantsRequest,
    InduceRequest,
    ParabolicTableRequest,
    RepsRequest,
    RestrictRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLES = 1
EXIT_USAGE = 2
EXIT_RANK_CAP = 3
EXIT_TRANSPORT = 4

ROUTES: dict[str, tuple[type[BaseModel], Callable[..., BaseModel]]] = {
    "/reps": (RepsRequest, handlers.handle_reps),
    "/constants": (ConstantsRequest, handlers.handle_constants),
    "/class-table": (ClassTableRequest, handlers.handle_class_table),
    "/parabolic-table": (ParabolicTableRequest, handlers.handle_parabolic_table),
    "/induce": (InduceRequest, handlers.handle_induce),
    "/restrict": (RestrictRequest, handlers.handle_restrict),
    "/verify": (VerifyRequest, handlers.handle_verify),
}


def _invoke(server: str | None, path: str, payload: dict[str, Any]) -> tuple[int, dict]:
    if server is not None:
        try:
            response = httpx.post(server.rstrip("/") + path, json=payload, timeout=None)
        except httpx.HTTPError as exc:
            click.echo(f"error: cannot reach {server}: {exc}", err=True)
            sys.exit(EXIT_TRANSPORT)
        return response.status_code, response.json()
    request_cls, handler = ROUTES[path]
    try:
        request = request_cls(**payload)
    except ValidationError as exc:
        return 422, {"code": "invalid-request", "message": str(exc)}
    try:
        return 200, handler(request).model_dump(exclude_none=True)
    except DescentAlgebraError as exc:
        return error_status(exc)


def _fail(status: int, body: dict) -> None:
    code = body.get("code", "")
    message = body.get("message") or body.get("detail") or json.dumps(body)
    click.echo(f"error ({code or status}): {message}", err=True)
    sys.exit(EXIT_RANK_CAP if code == "rank-cap-exceeded" else EXIT_USAGE)


def _label_str(value: dict) -> str:
    parts = "+".join(str(p) for p in value.get("partition", []))
    rep = value.get("representative", [])
    rep_str = ",".join(f"a{k}" for k in rep) if rep else "empty"
    return f"{parts}@{rep_str}"


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, list):
        if all(isinstance(x, int) for x in value):
            return " ".join(str(x) for x in value)
        if all(isinstance(x, dict) for x in value):
            terms = [
                f"{x['coefficient']}*[{_label_str(x)}]" if "coefficient" in x else _label_str(x)
                for x in value
            ]
            return " + ".join(terms) if terms else "0"
    if isinstance(value, dict):
        return _label_str(value)
    return json.dumps(value, sort_keys=True)


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, indent=2, sort_keys=True))
        return
    import csv
    import io

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if "suites" in data:
        writer.writerow(["suite", "ok", "cases", "counterexamples"])
        for suite in data["suites"]:
            writer.writerow(
                [suite["name"], _csv_cell(suite["ok"]), suite["cases"], len(suite["counterexamples"])]
            )
    else:
        columns = data["columns"]
        writer.writerow(columns)
        for row in data["rows"]:
            writer.writerow([_csv_cell(row.get(column)) for column in columns])
    click.echo(buffer.getvalue(), nl=False)


def _common(f):
    f = click.option("--server", default=None, metavar="URL",
                     help="Send the request to a running service instead of in-process.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
                     show_default=True)(f)
    f = click.option("--equivalence", type=click.Choice(["full", "parabolic"]), default="full",
                     show_default=True, help="Which conjugacy identifies subsets into classes.")(f)
    f = click.option("--rank", type=int, required=True, help="Ambient rank n (group S_{n+1}).")(f)
    return f


def _run_table(path: str, payload: dict, server: str | None, fmt: str) -> None:
    status, body = _invoke(server, path, payload)
    if status != 200:
        _fail(status, body)
    _emit(body, fmt)


@click.group()
@click.version_option(package_name="descent-algebra")
def main() -> None:
    """Exact tables and identity verifiers for coset-class descent algebras."""


@main.command()
@_common
@click.option("--target", required=True, help="Subset K of X_K, e.g. 'a1,a3', 'full', 'empty'.")
@click.option("--context", default="full", show_default=True,
              help="Ambient parabolic context J for the within-W_J representatives.")
def reps(rank, equivalence, fmt, server, target, context) -> None:
    """Distinguished minimal-length coset representatives."""
    _run_table("/reps", {"rank": rank, "target": target, "context": context,
                         "equivalence": equivalence}, server, fmt)


@main.command()
@_common
@click.option("--J", "j", required=True, help="Left subset of the product.")
@click.option("--K", "k", required=True, help="Right subset of the product.")
@click.option("--context", default=None,
              help="Compute the constants inside this parabolic context instead of the full group.")
def constants(rank, equivalence, fmt, server, j, k, context) -> None:
    """Structure constants of x_J · x_K, one row per subset of K."""
    _run_table("/constants", {"rank": rank, "j": j, "k": k, "context": context,
                              "equivalence": equivalence}, server, fmt)


@main.command(name="class-table")
@_common
def class_table(rank, equivalence, fmt, server) -> None:
    """Full multiplication table of the class algebra over the whole simple system."""
    _run_table("/class-table", {"rank": rank, "equivalence": equivalence}, server, fmt)


@main.command(name="parabolic-table")
@_common
@click.option("--J", "j", required=True, help="Parabolic context whose class algebra to tabulate.")
def parabolic_table(rank, equivalence, fmt, server, j) -> None:
    """Multiplication table of the class algebra inside a parabolic context."""
    _run_table("/parabolic-table", {"rank": rank, "j": j, "equivalence": equivalence},
               server, fmt)


@main.command()
@_common
@click.option("--lower", required=True, help="Lower context J.")
@click.option("--upper", default="full", show_default=True, help="Upper context M.")
@click.option("--K", "k", required=True, help="Representative of the class to induce.")
def induce(rank, equivalence, fmt, server, lower, upper, k) -> None:
    """Induce a basis class from the lower context into the upper one."""
    _run_table("/induce", {"rank": rank, "lower": lower, "upper": upper, "k": k,
                           "equivalence": equivalence}, server, fmt)


@main.command()
@_common
@click.option("--lower", required=True, help="Lower context J.")
@click.option("--upper", default="full", show_default=True, help="Upper context M.")
@click.option("--K", "k", required=True, help="Representative of the class to restrict.")
@click.option("--alt", is_flag=True, help="Use the forward-image form of restriction.")
def restrict(rank, equivalence, fmt, server, lower, upper, k, alt) -> None:
    """Restrict a basis class from the upper context down to the lower one."""
    _run_table("/restrict", {"rank": rank, "lower": lower, "upper": upper, "k": k,
                             "alt": alt, "equivalence": equivalence}, server, fmt)


@main.command()
@_common
@click.option("--suite", type=click.Choice(["solomon", "lemma22", "theorem21",
                                            "well-defined", "theorem25", "all"]),
              default="all", show_default=True)
@click.option("--context", default=None,
              help="Context for the well-defined suite (defaults to the full simple system).")
def verify(rank, equivalence, fmt, server, suite, context) -> None:
    """Run an identity suite; exit 1 if any counterexample is found."""
    status, body = _invoke(server, "/verify", {"rank": rank, "suite": suite,
                                               "context": context, "equivalence": equivalence})
    if status != 200:
        _fail(status, body)
    _emit(body, fmt)
    if not body["ok"]:
        sys.exit(EXIT_COUNTEREXAMPLES)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the table service under uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
