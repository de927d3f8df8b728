"""Separability in t of rational, hyperexponential, hypergeometric and algebraic functions."""

import json

from ._septel import __version__, run_batch as _run_batch, run_query as _run_query, verify_certificate

__all__ = [
    "run",
    "run_batch",
    "sep_rational",
    "sep_hyperexp",
    "sep_hypergeom",
    "sep_algebraic",
    "telescoper",
    "dispersion",
    "verify_certificate",
    "__version__",
]


def run(command, expr, **options):
    """Run one query; returns (result dict, exit code)."""
    text, code = _run_query(json.dumps(dict(command=command, expr=expr, **options)))
    return json.loads(text), code


def run_batch(queries):
    return [(json.loads(text), code) for text, code in _run_batch([json.dumps(q) for q in queries])]


def sep_rational(expr, vars=("x",), kind="D"):
    return run("sep-rational", expr, vars=list(vars), kind=kind)[0]


def sep_hyperexp(a, vars=("x",)):
    return run("sep-hyperexp", a, vars=list(vars))[0]


def sep_hypergeom(a, vars=("x",)):
    return run("sep-hypergeom", a, vars=list(vars))[0]


def sep_algebraic(poly, vars=("x",), **options):
    return run("sep-algebraic", poly, vars=list(vars), **options)[0]


def telescoper(f, mode, var="x"):
    return run("telescoper", f, mode=mode, vars=[var])[0]


def dispersion(poly, var="t", at=None, vars=("x",)):
    options = dict(var=var, vars=list(vars))
    if at is not None:
        options["at"] = at
    return run("dispersion", poly, **options)[0]["witnesses"]
