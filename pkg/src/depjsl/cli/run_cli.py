from __future__ import annotations
"""Command-line entry point.

Usage (CLI):
    python -m depjsl.cli.run_cli open examples.rel
    python -m depjsl.cli.run_cli --format dot hasse m3.jsl
    python -m depjsl.cli.run_cli check --suite rep-red --max-size 4 --cases 50 --seed 0
"""

import json
import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Tuple, Type, Union

from typer import Context, Option, Typer, echo

from depjsl.checks.suites import SUITES, check_suite
from depjsl.demorgan.algebra import UnaryAlgebra
from depjsl.demorgan.functors import open_g, pirr_g
from depjsl.demorgan.graphs import UGraph
from depjsl.dep.morphism import DepMorphism, dep_compose, dep_validate
from depjsl.dep.reduction import dep_reduce
from depjsl.equivalence.completion import dm_completion
from depjsl.equivalence.functors import nleq_obj, open_obj, pirr_obj
from depjsl.errors import DepJslError, ParseError, PropertyViolation
from depjsl.finrel.finset import FinSet
from depjsl.finrel.poset import Poset
from depjsl.finrel.relation import Rel, rel_compose
from depjsl.freecat.duality import birkhoff_ji, birkhoff_up
from depjsl.freecat.free import free_ba_object, free_dl_object, free_jsl_object
from depjsl.io.dot import dot_export, hasse as hasse_dot
from depjsl.io.formats import (
    element_tokens,
    load,
    serialize_jsl,
    serialize_poset,
    serialize_rel,
    serialize_ug,
)
from depjsl.jsl.morphism import JslMorphism
from depjsl.jsl.semilattice import Jsl
from depjsl.tensor.product import tensor as tensor_product
from depjsl.tensor.sync import sync_product
from depjsl.tensor.tight import tight_tensor
from depjsl.utils.config import Config
from depjsl.utils.logging_setup import init_logger

app = Typer(add_help_option=True)
dep_app = Typer(add_help_option=True, help="Dep morphisms given as relations between relations.")
demorgan_app = Typer(add_help_option=True, help="Undirected graphs and De Morgan algebras.")
free_app = Typer(add_help_option=True, help="Free constructions.")
app.add_typer(dep_app, name="dep")
app.add_typer(demorgan_app, name="demorgan")
app.add_typer(free_app, name="free")

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    text = "text"
    dot = "dot"
    json = "json"


Value = Union[Rel, Poset, Jsl, UnaryAlgebra, UGraph, DepMorphism, JslMorphism]


# ---------------------------------------------------------------------------
# internal helpers
# ---------------------------------------------------------------------------

@contextmanager
def _reporting() -> Iterator[None]:
    """Turn library errors into ``error: <message>`` on stderr and the error's exit code."""
    try:
        yield
    except DepJslError as exc:
        echo(f"error: {exc.message}", err=True)
        raise SystemExit(exc.exit_code)


def _load(path: Path, *kinds: Type) -> Any:
    if not path.exists():
        echo(f"File not found: {path}", err=True)
        raise SystemExit(2)
    value = load(path)
    if kinds and not isinstance(value, kinds):
        wanted = " or ".join(k.__name__ for k in kinds)
        raise ParseError(f"{path}: expected a {wanted}, got a {type(value).__name__}")
    return value


def _as_jsl(value: Union[Jsl, UnaryAlgebra]) -> Jsl:
    return value.base if isinstance(value, UnaryAlgebra) else value


def _as_poset(value: Union[Poset, Jsl, UnaryAlgebra]) -> Poset:
    return value if isinstance(value, Poset) else _as_jsl(value).order


def _renamed(q: Jsl, names) -> Jsl:
    return Jsl(Poset(FinSet(tuple(names)), q.leq))


def _text(value: Value) -> str:
    if isinstance(value, (Jsl, UnaryAlgebra)):
        return serialize_jsl(value)
    if isinstance(value, Poset):
        return serialize_poset(value)
    if isinstance(value, UGraph):
        return serialize_ug(value)
    if isinstance(value, Rel):
        return serialize_rel(value)
    if isinstance(value, DepMorphism):
        return serialize_rel(value.rel)
    if isinstance(value, JslMorphism):
        src, tgt = element_tokens(value.dom.carrier), element_tokens(value.cod.carrier)
        return "".join(f"map: {src[i]} {tgt[j]}\n" for i, j in enumerate(value.images))
    return f"{value}\n"


def _payload(value: Value) -> Dict[str, Any]:
    """JSON-ready description with a fixed key order."""
    if isinstance(value, DepMorphism):
        value = value.rel
    if isinstance(value, Rel):
        src, tgt = element_tokens(value.source), element_tokens(value.target)
        return {
            "source": src,
            "target": tgt,
            "pairs": [[src[a], tgt[b]] for a, b in zip(*value.matrix.nonzero())],
        }
    if isinstance(value, UGraph):
        names = element_tokens(value.vertices)
        idx = {v: names[i] for i, v in enumerate(value.vertices)}
        return {"vertices": names, "edges": [[idx[a], idx[b]] for a, b in value.edge_list()]}
    if isinstance(value, Poset):
        names = element_tokens(value.carrier)
        return {"elements": names, "covers": [[names[a], names[b]] for a, b in zip(*value.cover_matrix.nonzero())]}
    if isinstance(value, UnaryAlgebra):
        out = _payload(value.base)
        names = out["elements"]
        out["kind"] = value.kind.value
        out["sigma"] = {names[i]: names[j] for i, j in enumerate(value.sigma)}
        return out
    if isinstance(value, Jsl):
        out = _payload(value.order)
        out["join_irreducibles"] = [out["elements"][j] for j in value.ji]
        out["meet_irreducibles"] = [out["elements"][m] for m in value.mi]
        return out
    if isinstance(value, JslMorphism):
        src, tgt = element_tokens(value.dom.carrier), element_tokens(value.cod.carrier)
        return {"map": {src[i]: tgt[j] for i, j in enumerate(value.images)}}
    return {"value": str(value)}


def _dot(value: Value) -> str:
    if isinstance(value, DepMorphism):
        value = value.rel
    if isinstance(value, JslMorphism):
        value = value.cod
    return dot_export(value)


def _emit(ctx: Context, *parts: Tuple[str, Value]) -> None:
    """Render named values in the selected format and write them to stdout or ``--output``."""
    fmt: OutputFormat = ctx.obj["format"]
    if fmt is OutputFormat.json:
        body = parts[0][1] if len(parts) == 1 else None
        data = _payload(body) if body is not None else {name: _payload(v) for name, v in parts}
        out = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    elif fmt is OutputFormat.dot:
        out = "".join(_dot(v) for _, v in parts)
    elif len(parts) == 1:
        out = _text(parts[0][1])
    else:
        out = "".join(f"# {name}\n{_text(v)}" for name, v in parts)
    _write(ctx, out)


def _write(ctx: Context, out: str) -> None:
    target: Optional[Path] = ctx.obj["output"]
    if target is None:
        echo(out, nl=False)
    else:
        target.write_text(out, encoding="utf-8")
        logger.debug("wrote %d characters to %s", len(out), target)


# ---------------------------------------------------------------------------
# global options
# ---------------------------------------------------------------------------

@app.callback()
def main(
    ctx: Context,
    fmt: OutputFormat = Option(OutputFormat.text, "--format", help="text, dot or json"),
    output: Optional[Path] = Option(None, "--output", help="Write to this file instead of stdout."),
    verbose: bool = Option(False, "--verbose", help="Debug logging on stderr."),
):
    """Finite relations, join-semilattices and the dependency category."""
    init_logger(level=logging.DEBUG if verbose else None)
    issues = Config.validate()
    if issues:
        for issue in issues:
            echo(f"error: {issue}", err=True)
        raise SystemExit(2)
    ctx.obj = {"format": fmt, "output": output}


# ---------------------------------------------------------------------------
# relations and semilattices
# ---------------------------------------------------------------------------

@app.command("open")
def open_cmd(ctx: Context, rel: Path):
    """Open-set lattice of a relation."""
    with _reporting():
        _emit(ctx, ("open", open_obj(_load(rel, Rel))))


@app.command()
def pirr(ctx: Context, jsl: Path):
    """Join-irreducibles against meet-irreducibles, related by ≰."""
    with _reporting():
        _emit(ctx, ("pirr", pirr_obj(_as_jsl(_load(jsl, Jsl, UnaryAlgebra)))))


@app.command()
def nleq(ctx: Context, jsl: Path):
    """The full ≰ relation of a semilattice."""
    with _reporting():
        _emit(ctx, ("nleq", nleq_obj(_as_jsl(_load(jsl, Jsl, UnaryAlgebra)))))


@app.command()
def dm(ctx: Context, poset: Path):
    """Dedekind-MacNeille completion."""
    with _reporting():
        completion, _ = dm_completion(_as_poset(_load(poset, Poset, Jsl, UnaryAlgebra)))
        _emit(ctx, ("dm", completion))


@app.command()
def compose(ctx: Context, first: Path, second: Path):
    """Relational composite, first then second."""
    with _reporting():
        _emit(ctx, ("compose", rel_compose(_load(first, Rel), _load(second, Rel))))


@app.command()
def reduce(ctx: Context, rel: Path):
    """The canonical reduced relation Pirr(Open g)."""
    with _reporting():
        _emit(ctx, ("reduced", pirr_obj(open_obj(_load(rel, Rel)))))


@app.command()
def hasse(ctx: Context, path: Path):
    """Hasse diagram as DOT, whatever ``--format`` says."""
    with _reporting():
        _write(ctx, hasse_dot(_as_poset(_load(path, Poset, Jsl, UnaryAlgebra))))


@app.command()
def birkhoff(ctx: Context, path: Path):
    """Up-sets of a poset, or the join-irreducible poset of a distributive lattice."""
    with _reporting():
        value = _load(path, Poset, Jsl, UnaryAlgebra)
        if isinstance(value, Poset):
            _emit(ctx, ("up-sets", birkhoff_up(value)))
        else:
            _emit(ctx, ("join-irreducibles", birkhoff_ji(_as_jsl(value))))


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

@app.command()
def tensor(ctx: Context, left: Path, right: Path):
    """Tensor product; elements are the bi-ideals as sets of pairs."""
    with _reporting():
        t = tensor_product(_as_jsl(_load(left, Jsl, UnaryAlgebra)), _as_jsl(_load(right, Jsl, UnaryAlgebra)))
        _emit(ctx, ("tensor", _renamed(t, (b.pairs for b in t.elements))))


@app.command()
def ttensor(ctx: Context, left: Path, right: Path):
    """Tight tensor product; elements are tight morphisms from the dual of the left factor."""
    with _reporting():
        t = tight_tensor(_as_jsl(_load(left, Jsl, UnaryAlgebra)), _as_jsl(_load(right, Jsl, UnaryAlgebra)))
        _emit(ctx, ("ttensor", t))


@app.command()
def sync(ctx: Context, left: Path, right: Path):
    """Synchronous (Kronecker) product of two relations."""
    with _reporting():
        _emit(ctx, ("sync", sync_product(_load(left, Rel), _load(right, Rel))))


# ---------------------------------------------------------------------------
# dep
# ---------------------------------------------------------------------------

@dep_app.command("check")
def dep_check(
    ctx: Context,
    rel: Path,
    dom: Path = Option(..., "--dom", help="Domain relation."),
    cod: Path = Option(..., "--cod", help="Codomain relation."),
):
    """Validate a Dep morphism and print its maximum witnesses."""
    with _reporting():
        r = dep_validate(_load(rel, Rel), _load(dom, Rel), _load(cod, Rel))
        _emit(ctx, ("minus", r.minus), ("plus", r.plus))


@dep_app.command("compose")
def dep_compose_cmd(
    ctx: Context,
    first: Path,
    second: Path,
    dom: Path = Option(..., "--dom", help="Domain of the first morphism."),
    mid: Path = Option(..., "--mid", help="Codomain of the first, domain of the second."),
    cod: Path = Option(..., "--cod", help="Codomain of the second morphism."),
):
    """Composite of two Dep morphisms."""
    with _reporting():
        g, h, k = _load(dom, Rel), _load(mid, Rel), _load(cod, Rel)
        r = dep_validate(_load(first, Rel), g, h)
        s = dep_validate(_load(second, Rel), h, k)
        _emit(ctx, ("composite", dep_compose(r, s)))


@dep_app.command("reduce")
def dep_reduce_cmd(ctx: Context, rel: Path):
    """A reduced restriction of a relation and the Dep isomorphism onto it."""
    with _reporting():
        reduced, iso = dep_reduce(_load(rel, Rel))
        _emit(ctx, ("reduced", reduced), ("isomorphism", iso))


# ---------------------------------------------------------------------------
# demorgan
# ---------------------------------------------------------------------------

@demorgan_app.command("to-algebra")
def to_algebra(ctx: Context, ug: Path):
    """The De Morgan algebra of open sets of a graph."""
    with _reporting():
        _emit(ctx, ("algebra", open_g(_load(ug, UGraph))))


@demorgan_app.command("to-graph")
def to_graph(ctx: Context, jsl: Path):
    """The graph on join-irreducibles of an SAI algebra."""
    with _reporting():
        _emit(ctx, ("graph", pirr_g(_load(jsl, UnaryAlgebra))))


# ---------------------------------------------------------------------------
# free constructions
# ---------------------------------------------------------------------------

@free_app.command("jsl")
def free_jsl_cmd(ctx: Context, poset: Path):
    """Free join-semilattice on a poset: its down-sets."""
    with _reporting():
        _emit(ctx, ("free", free_jsl_object(_as_poset(_load(poset, Poset, Jsl, UnaryAlgebra)))))


@free_app.command("dl")
def free_dl_cmd(ctx: Context, jsl: Path):
    """Free distributive lattice on a join-semilattice."""
    with _reporting():
        _emit(ctx, ("free", free_dl_object(_as_jsl(_load(jsl, Jsl, UnaryAlgebra)))))


@free_app.command("ba")
def free_ba_cmd(ctx: Context, jsl: Path):
    """Free boolean algebra on a distributive lattice."""
    with _reporting():
        _emit(ctx, ("free", free_ba_object(_as_jsl(_load(jsl, Jsl, UnaryAlgebra)))))


# ---------------------------------------------------------------------------
# check suites
# ---------------------------------------------------------------------------

@app.command()
def suites(ctx: Context):
    """List the registered check suites."""
    if ctx.obj["format"] is OutputFormat.json:
        _write(
            ctx,
            json.dumps({name: {"theorem": s.theorem, "statement": s.statement} for name, s in SUITES.items()}, indent=2)
            + "\n",
        )
    else:
        _write(ctx, "".join(f"{name}: {s.theorem}: {s.statement}\n" for name, s in SUITES.items()))


@app.command()
def check(
    ctx: Context,
    suite: str = Option(..., "--suite", help="Registered suite name."),
    max_size: int = Option(4, "--max-size", min=1, help="Largest instance size."),
    cases: int = Option(20, "--cases", min=1, help="Number of random instances."),
    seed: Optional[int] = Option(None, "--seed", min=0, help="Base seed; defaults to DEPJSL_SEED."),
):
    """Run a check suite; exit 1 with the first counterexample on failure."""
    with _reporting():
        verbose = logging.getLogger("depjsl").isEnabledFor(logging.DEBUG)
        report = check_suite(suite, max_size, cases, seed, progress=verbose)
        if ctx.obj["format"] is OutputFormat.json:
            _write(ctx, report.model_dump_json(indent=2) + "\n")
        else:
            _write(ctx, report.to_text())
        if not report.passed:
            raise PropertyViolation(f"suite {suite} failed at case {report.counterexample.index}")


if __name__ == "__main__":
    app()
