"""Request handlers shared by the HTTP service and the CLI.

Each handler maps a request model to a response model, raising the package's
error types on bad input; transport concerns (HTTP status, exit codes) live
with the caller.
"""

from __future__ import annotations

from ..braids import BraidWord, parse_braid
from ..combing import comb, linking_numbers
from ..errors import DomainError
from ..free_group import is_identity
from ..invariants import fuzz_markov, report
from ..ordering import dehornoy_compare, fuzz_order, pure_compare
from ..representations import burau, modular
from ..temperley_lieb import jones_rep, markov_trace
from . import models


def _parse(text: str, n: int | None) -> BraidWord:
    return parse_braid(text, n_hint=n)


def handle_wp(req: models.BraidRequest) -> models.WordProblemResponse:
    b = _parse(req.text, req.n)
    return models.WordProblemResponse(
        n=b.n,
        identity=is_identity(b),
        pure=b.is_pure(),
        permutation=list(b.permutation().images),
        degree=b.degree(),
    )


def handle_compare(req: models.CompareRequest) -> models.CompareResponse:
    left = _parse(req.left, req.n)
    right = _parse(req.right, req.n)
    if left.n != right.n:
        m = max(left.n, right.n)
        left, right = left.include(m), right.include(m)
    if req.order == "dehornoy":
        result = dehornoy_compare(left, right, budget=req.budget)
    else:
        result = pure_compare(left, right, max_degree=req.truncation)
    return models.CompareResponse(order=req.order, result=result.code)


def handle_burau(req: models.BraidRequest) -> models.BurauResponse:
    b = _parse(req.text, req.n)
    matrix = burau(b)
    return models.BurauResponse(
        n=b.n,
        matrix=[[models.PolyJSON(**p.to_json("t")) for p in row] for row in matrix.rows],
    )


def handle_modular(req: models.BraidRequest) -> models.ModularResponse:
    b = _parse(req.text, req.n if req.n is not None else 3)
    if b.n < 3:
        b = b.include(3)
    return models.ModularResponse(matrix=[list(row) for row in modular(b)])


def handle_jones(req: models.BraidRequest) -> models.JonesResponse:
    b = _parse(req.text, req.n)
    r = report(b)
    payload = r.to_json()
    return models.JonesResponse(
        n=payload["n"],
        components=payload["components"],
        writhe=payload["writhe"],
        bracket=models.PolyJSON(**payload["bracket"]),
        f=models.PolyJSON(**payload["f"]),
        jones_q=models.PolyJSON(**payload["jones_q"]),
        jones=models.PolyJSON(**payload["jones"]),
    )


def handle_comb(req: models.BraidRequest) -> models.CombResponse:
    b = _parse(req.text, req.n)
    coordinates = comb(b)
    linking = linking_numbers(b)
    return models.CombResponse(
        n=b.n,
        coordinates=[w.text() for w in coordinates.coords],
        linking={f"{i},{j}": v for (i, j), v in sorted(linking.items())},
    )


def handle_tl(req: models.BraidRequest) -> models.TLResponse:
    b = _parse(req.text, req.n)
    element = jones_rep(b)
    payload = element.to_json()
    return models.TLResponse(
        n=payload["n"],
        terms=[
            models.TLTerm(matching=t["matching"], coeff=models.PolyJSON(**t["coeff"]))
            for t in payload["terms"]
        ],
        trace=models.PolyJSON(**markov_trace(element).to_json("A")),
    )


def handle_fuzz(req: models.FuzzRequest) -> models.FuzzResponse:
    if req.trials < 0:
        raise DomainError("trials must be >= 0")
    if req.kind == "markov":
        result = fuzz_markov(
            n_max=req.n_max, len_max=req.len_max, trials=req.trials, seed=req.seed
        )
    else:
        result = fuzz_order(
            n_max=req.n_max,
            len_max=req.len_max,
            trials=req.trials,
            seed=req.seed,
            budget=req.budget,
        )
    return models.FuzzResponse(**result.to_json())
