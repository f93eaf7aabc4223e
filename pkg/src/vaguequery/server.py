"""Command-line launcher for the HTTP service.

Every flag has a VAGUEQUERY_* environment variable mirror; flags win
when both are set. Without --datasets, the two bundled sample datasets
(earthquakes, nations) are preloaded so the service is usable at once.
"""

from __future__ import annotations

import argparse
import os
from pathlib import Path

import uvicorn

from .api_service import create_app
from .config import EngineConfig, default_dataset_path, load_resources
from .data_manager import Dataset, load_dataset

BUNDLED_DATASETS = ("earthquakes", "nations")


def _env(suffix: str, default: str | None = None) -> str | None:
    return os.environ.get(f"VAGUEQUERY_{suffix}", default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vaguequery-server",
        description="Serve the vague-modifier query interpreter over HTTP.",
    )
    parser.add_argument("--port", type=int, default=int(_env("PORT", "8000")))
    parser.add_argument("--host", default=_env("HOST", "127.0.0.1"))
    parser.add_argument("--corpus", default=_env("CORPUS"), help="n-gram count corpus (TSV)")
    parser.add_argument("--sentiment-lexicon", default=_env("SENTIMENT_LEXICON"))
    parser.add_argument("--pos-lexicon", default=_env("POS_LEXICON"))
    parser.add_argument(
        "--numeric-gradable-lexicon", default=_env("NUMERIC_GRADABLE_LEXICON")
    )
    parser.add_argument("--domain-registry", default=_env("DOMAIN_REGISTRY"))
    parser.add_argument(
        "--datasets",
        default=_env("DATASETS"),
        help="directory of CSV files to preload (default: bundled samples)",
    )
    parser.add_argument(
        "--cors-origins",
        default=_env("CORS_ORIGINS", "*"),
        help="comma-separated allowed origins for the web UI",
    )
    return parser


def make_config(args: argparse.Namespace) -> EngineConfig:
    base = EngineConfig.default()
    return EngineConfig(
        corpus_path=Path(args.corpus) if args.corpus else base.corpus_path,
        sentiment_lexicon_path=(
            Path(args.sentiment_lexicon) if args.sentiment_lexicon else base.sentiment_lexicon_path
        ),
        pos_lexicon_path=Path(args.pos_lexicon) if args.pos_lexicon else base.pos_lexicon_path,
        numeric_gradable_path=(
            Path(args.numeric_gradable_lexicon)
            if args.numeric_gradable_lexicon
            else base.numeric_gradable_path
        ),
        domain_registry_path=(
            Path(args.domain_registry) if args.domain_registry else base.domain_registry_path
        ),
    )


def load_datasets(directory: str | None) -> dict[str, Dataset]:
    datasets: dict[str, Dataset] = {}
    if directory:
        for path in sorted(Path(directory).glob("*.csv")):
            datasets[path.stem] = load_dataset(path.read_bytes(), name=path.stem)
    else:
        for name in BUNDLED_DATASETS:
            path = default_dataset_path(name)
            datasets[name] = load_dataset(path.read_bytes(), name=name)
    return datasets


def main(argv: list[str] | None = None) -> None:
    args = build_parser().parse_args(argv)
    resources = load_resources(make_config(args))
    datasets = load_datasets(args.datasets)
    origins = [o.strip() for o in args.cors_origins.split(",") if o.strip()]
    app = create_app(resources, datasets, cors_origins=origins)
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
