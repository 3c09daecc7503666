"""FastAPI application exposing the metrics, counting, enumeration, and
verification operations.  The CLI is a thin client of this API; anything the
CLI can do, any HTTP consumer can do."""

from __future__ import annotations

import json
from itertools import islice

from fastapi import FastAPI, HTTPException
from fastapi.responses import StreamingResponse

from .. import __version__
from ..core import class_difference, proper_distance
from ..counting import (
    FLIP_BUDGET_CEIL_HALF,
    FLIP_BUDGET_EXACT,
    count_shortest_proper_paths,
    profile_path_count,
)
from ..enumeration import enumerate_shortest_proper_paths
from ..oracle import BudgetExceededError, build_colored_hypercube, oracle_count_shortest
from ..verify import run_verification
from .schemas import (
    CountRequest,
    CountResponse,
    DistanceResponse,
    EnumerateRequest,
    HealthResponse,
    MismatchRecord,
    PairQuery,
    TableRequest,
    TableResponse,
    TableRow,
    VerifyRequest,
    VerifyResponse,
)

ORACLE_MAX_N = 20


def create_app() -> FastAPI:
    app = FastAPI(
        title="propercube",
        version=__version__,
        description=(
            "Exact shortest properly-colored path metrics, counts, and "
            "enumeration for 2-edge-colored hypercube networks."
        ),
    )

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse(service="propercube", version=__version__)

    @app.post("/distance", response_model=DistanceResponse)
    def distance(query: PairQuery) -> DistanceResponse:
        u, v, c = query.to_domain()
        o, t = class_difference(u, v, c)
        return DistanceResponse(o=o, t=t, gamma=(o + t) & 1, pd=proper_distance(u, v, c))

    @app.post("/count", response_model=CountResponse, response_model_exclude_none=True)
    def count(query: CountRequest) -> CountResponse:
        u, v, c = query.to_domain()
        pp = count_shortest_proper_paths(u, v, c)
        if not query.oracle:
            return CountResponse(pp=str(pp))
        if query.n > ORACLE_MAX_N:
            raise HTTPException(
                status_code=400,
                detail=f"oracle verification is limited to n <= {ORACLE_MAX_N}",
            )
        g = build_colored_hypercube(query.n, c)
        try:
            brute = oracle_count_shortest(g, u.mask, v.mask, budget=query.budget)
        except BudgetExceededError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return CountResponse(pp=str(pp), oracle=str(brute), agree=brute == pp)

    @app.post("/enumerate")
    def enumerate_paths(query: EnumerateRequest) -> StreamingResponse:
        u, v, c = query.to_domain()

        def lines():
            emitted = 0
            stream = enumerate_shortest_proper_paths(u, v, c)
            if query.limit is not None:
                stream = islice(stream, query.limit)
            for path in stream:
                emitted += 1
                record = {
                    "flips": list(path.flips),
                    "vertices": [str(w) for w in path.vertices],
                }
                yield json.dumps(record) + "\n"
            yield json.dumps({"total": emitted}) + "\n"

        return StreamingResponse(lines(), media_type="application/x-ndjson")

    @app.post("/table", response_model=TableResponse)
    def table(query: TableRequest) -> TableResponse:
        c = query.to_domain()
        l1 = len(c.class1)
        l2 = c.n - l1
        rows = []
        for o in range(l1 + 1):
            for t in range(l2 + 1):
                g = (o + t) & 1
                pd = 0 if o == t == 0 else 2 * max(o, t) - g
                rows.append(
                    TableRow(o=o, t=t, gamma=g, pd=pd, pp=str(profile_path_count(o, t, c)))
                )
        return TableResponse(n=c.n, coloring=c.spec(), rows=rows)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(query: VerifyRequest) -> VerifyResponse:
        report = run_verification(
            query.max_n,
            colorings=query.colorings,
            budget=query.budget,
            seed=query.seed,
            flip_budget=FLIP_BUDGET_CEIL_HALF if query.negative_control else FLIP_BUDGET_EXACT,
        )
        return VerifyResponse(
            scope=report.scope,
            checked=report.checked,
            skipped=report.skipped,
            passed=report.passed,
            mismatches=[MismatchRecord(**vars(m)) for m in report.mismatches],
            elapsed=report.elapsed,
        )

    return app
