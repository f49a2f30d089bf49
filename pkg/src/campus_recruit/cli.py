"""Operational entry points: serve / migrate / seed."""

from __future__ import annotations

import argparse
import json
import socket
import sys
from pathlib import Path

from .api import create_app
from .config import ServiceConfig, load_config
from .errors import AppError
from .store import Store, seed_store


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="path to a JSON config document")
    parser.add_argument("--store", help="override the store path")


def _build_config(args: argparse.Namespace) -> ServiceConfig:
    config = load_config(args.config)
    overrides = {}
    if args.store:
        overrides["store_path"] = args.store
    if getattr(args, "host", None):
        overrides["host"] = args.host
    if getattr(args, "port", None):
        overrides["port"] = args.port
    if overrides:
        config = ServiceConfig(**{**config.__dict__, **overrides})
    return config


def cmd_migrate(args: argparse.Namespace) -> int:
    config = _build_config(args)
    store = Store(config.store_path, busy_timeout_ms=config.busy_timeout_ms)
    store.migrate()
    print(f"schema ready at {config.store_path}")
    return 0


def cmd_seed(args: argparse.Namespace) -> int:
    config = _build_config(args)
    store = Store(config.store_path, busy_timeout_ms=config.busy_timeout_ms)
    store.migrate()
    fixture = None
    if args.fixture:
        fixture = json.loads(Path(args.fixture).read_text())
    inserted = seed_store(store, fixture)
    print(f"seeded {inserted} rows into {config.store_path}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = _build_config(args)
    # fail fast with a clear message when the port is taken
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        probe.bind((config.host, config.port))
    except OSError as exc:
        print(f"cannot bind {config.host}:{config.port}: {exc}", file=sys.stderr)
        return 1
    finally:
        probe.close()
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="campus-recruit", description="campus recruitment service"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service")
    _add_common(serve)
    serve.add_argument("--host")
    serve.add_argument("--port", type=int)
    serve.set_defaults(handler=cmd_serve)

    migrate = sub.add_parser("migrate", help="create or update the schema")
    _add_common(migrate)
    migrate.set_defaults(handler=cmd_migrate)

    seed = sub.add_parser("seed", help="load a JSON fixture (idempotent)")
    _add_common(seed)
    seed.add_argument("--fixture", help="fixture path (defaults to the packaged seed)")
    seed.set_defaults(handler=cmd_seed)

    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except AppError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
