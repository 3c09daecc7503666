"""Command-line client for the propercube service.

Every subcommand talks to the HTTP API.  With ``--url`` (or the
``PROPERCUBE_URL`` environment variable) requests go to a running server;
otherwise the service application is mounted in-process, so the CLI works
standalone with identical request/response semantics.

Exit codes: 0 success, 1 verification mismatch or operational failure
(budget exceeded, connection refused), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from . import __version__

URL_ENV = "PROPERCUBE_URL"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _make_client(url: str | None) -> httpx.AsyncClient:
    url = url or os.environ.get(URL_ENV) or None
    if url:
        return httpx.AsyncClient(base_url=url, timeout=None)
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    return httpx.AsyncClient(transport=transport, base_url="http://propercube.local", timeout=None)


def _detail_text(payload) -> str:
    if isinstance(payload, dict):
        payload = payload.get("detail", payload)
    if isinstance(payload, list):  # pydantic validation errors
        return "; ".join(str(item.get("msg", item)) for item in payload)
    return str(payload)


def _raise_for_status(resp: httpx.Response, body) -> None:
    if resp.status_code == 422:
        raise CliError(2, f"invalid request: {_detail_text(body)}")
    if resp.status_code >= 400:
        raise CliError(1, f"request failed ({resp.status_code}): {_detail_text(body)}")


async def _post(client: httpx.AsyncClient, path: str, payload: dict) -> dict:
    resp = await client.post(path, json=payload)
    body = resp.json()
    _raise_for_status(resp, body)
    return body


def _coloring_spec(args: argparse.Namespace) -> str:
    return f"j={args.j}" if args.j is not None else args.class1


def _pair_payload(args: argparse.Namespace) -> dict:
    return {"n": args.n, "coloring": _coloring_spec(args), "u": args.u, "v": args.v}


async def _cmd_distance(args, client) -> int:
    data = await _post(client, "/distance", _pair_payload(args))
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(f"o={data['o']} t={data['t']} gamma={data['gamma']} pd={data['pd']}")
    return 0


async def _cmd_count(args, client) -> int:
    payload = _pair_payload(args)
    payload["oracle"] = args.oracle
    payload["budget"] = args.budget
    data = await _post(client, "/count", payload)
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.oracle:
        agree = "true" if data["agree"] else "false"
        print(f"pp={data['pp']} oracle={data['oracle']} agree={agree}")
    else:
        print(f"pp={data['pp']}")
    if args.oracle and not data["agree"]:
        return 1
    return 0


async def _cmd_enumerate(args, client) -> int:
    payload = _pair_payload(args)
    if args.limit is not None:
        payload["limit"] = args.limit
    async with client.stream("POST", "/enumerate", json=payload) as resp:
        if resp.status_code >= 400:
            await resp.aread()
            _raise_for_status(resp, resp.json())
        async for line in resp.aiter_lines():
            if not line.strip():
                continue
            record = json.loads(line)
            if "total" in record:
                if args.format == "json":
                    print(line)
                else:
                    print(f"total {record['total']}")
            elif args.format == "json":
                print(line)
            elif args.format == "vertices":
                print("->".join(record["vertices"]))
            else:
                print("dims: " + ",".join(str(d) for d in record["flips"]))
    return 0


async def _cmd_table(args, client) -> int:
    data = await _post(client, "/table", {"n": args.n, "coloring": _coloring_spec(args)})
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("o,t,gamma,pd,pp")
        for row in data["rows"]:
            print(f"{row['o']},{row['t']},{row['gamma']},{row['pd']},{row['pp']}")
    return 0


async def _cmd_verify(args, client) -> int:
    payload = {
        "max_n": args.max_n,
        "colorings": args.colorings,
        "budget": args.budget,
        "seed": args.seed,
        "negative_control": args.negative_control,
    }
    data = await _post(client, "/verify", payload)
    print(json.dumps(data, indent=2))
    return 0 if data["passed"] else 1


_HANDLERS = {
    "distance": _cmd_distance,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def _add_pair_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, required=True, help="dimension count")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--j", type=int, help="prefix coloring: class 1 = dimensions 1..j")
    group.add_argument("--class1", help="explicit class-1 dimensions, e.g. 1,2,5")
    sub.add_argument("--u", required=True, help="source vertex bit string")
    sub.add_argument("--v", required=True, help="target vertex bit string")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propercube",
        description="Shortest properly-colored path metrics in 2-edge-colored hypercubes",
    )
    parser.add_argument("--version", action="version", version=f"propercube {__version__}")
    parser.add_argument(
        "--url",
        help=f"base URL of a running service (default: in-process; also ${URL_ENV})",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("distance", help="pair metrics o, t, gamma, pd")
    _add_pair_arguments(sub)
    sub.add_argument("--format", choices=["json", "text"], default="json")

    sub = subs.add_parser("count", help="exact shortest proper path count")
    _add_pair_arguments(sub)
    sub.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    sub.add_argument("--budget", type=int, default=10**6, help="oracle path budget")
    sub.add_argument("--format", choices=["json", "text"], default="json")

    sub = subs.add_parser("enumerate", help="stream every shortest proper path")
    _add_pair_arguments(sub)
    sub.add_argument("--limit", type=int, help="stop after this many paths")
    sub.add_argument("--format", choices=["flips", "vertices", "json"], default="flips")

    sub = subs.add_parser("table", help="path counts for every (o, t) profile")
    sub.add_argument("--n", type=int, required=True)
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--j", type=int)
    group.add_argument("--class1")
    sub.add_argument("--format", choices=["json", "csv"], default="json")

    sub = subs.add_parser("verify", help="formula-vs-oracle sweep; exit 1 on mismatch")
    sub.add_argument("--max-n", type=int, required=True, dest="max_n")
    sub.add_argument("--colorings", default="all-j", help="all-j or random-jstar:K")
    sub.add_argument("--budget", type=int, default=10**6)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument(
        "--negative-control",
        action="store_true",
        help="verify with a deliberately wrong flip budget; the sweep must fail",
    )

    sub = subs.add_parser("serve", help="run the HTTP service")
    sub.add_argument("--host", default="127.0.0.1")
    sub.add_argument("--port", type=int, default=8000)

    return parser


async def _dispatch(args: argparse.Namespace) -> int:
    async with _make_client(args.url) as client:
        return await _HANDLERS[args.command](args, client)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0
    try:
        return asyncio.run(_dispatch(args))
    except CliError as exc:
        print(f"propercube: {exc}", file=sys.stderr)
        return exc.code
    except httpx.HTTPError as exc:
        print(f"propercube: transport error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream consumer (head, less) closed the stream; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


def run() -> None:
    raise SystemExit(main())
