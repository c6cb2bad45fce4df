"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
Documents go to standard output (or ``--out``); messages go to stderr.
"""

import argparse
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ttframes import __version__
from ttframes.entities.exceptions import (
    BoundExceeded,
    GenerationFailure,
    SystemFormatError,
    TTFramesError,
    UndeclaredObjectError,
    UnknownSystemError,
)
from ttframes.entities.tensor_entities import TensorSystem
from ttframes.frameworks.builtin_catalog import builtin_names
from ttframes.frameworks.dot_emitter import DotDocumentEmitter
from ttframes.frameworks.json_codec import JsonDocumentEmitter
from ttframes.frameworks.logging_config import get_logger
from ttframes.frameworks.pipeline import create_pipeline
from ttframes.frameworks.system_file_loader import TextSystemLoader
from ttframes.frameworks.text_emitter import TextDocumentEmitter
from ttframes.usecases.ideals import close
from ttframes.usecases.interfaces.framework_interfaces import DocumentEmitterInterface
from ttframes.usecases.structure_documents import (
    bundle_document,
    dual_document,
    ideals_document,
    primes_document,
    radical_document,
    spc_document,
    support_document,
    validation_document,
    zar_document,
)
from ttframes.usecases.tensor_systems import MAX_RANDOM_OBJECTS, random_system, validate


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

INPUT_ERRORS = (SystemFormatError, UnknownSystemError, GenerationFailure, BoundExceeded, OSError, ValueError)


class Command(str, Enum):
    VALIDATE = "validate"
    IDEALS = "ideals"
    PRIMES = "primes"
    RADICAL = "radical"
    ZAR = "zar"
    SPC = "spc"
    DUAL = "dual"
    SUPPORT = "support"
    VERIFY = "verify"
    EMIT = "emit"


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    TEXT = "text"


class RunConfig(BaseModel):
    """Validated command-line request."""

    model_config = ConfigDict(frozen=True)

    command: Command
    builtin: Optional[str] = None
    file: Optional[str] = None
    seed: Optional[int] = None
    seed_range: Optional[Tuple[int, int]] = None
    max_objects: int = Field(8, ge=2, le=MAX_RANDOM_OBJECTS)
    output_format: OutputFormat = OutputFormat.TEXT
    out: Optional[str] = None
    strict: bool = False
    ideal: Tuple[str, ...] = ()
    max_ideal_objects: int = Field(16, gt=0)
    search_bound: int = Field(12, gt=0)

    @field_validator("seed_range", mode="before")
    @classmethod
    def parse_seed_range(cls, value):
        if isinstance(value, str):
            first, sep, last = value.partition("..")
            if not sep:
                raise ValueError("seed range must look like A..B")
            value = (int(first), int(last))
        return value

    @model_validator(mode="after")
    def one_input(self) -> "RunConfig":
        given = [
            name for name in ("builtin", "file", "seed", "seed_range") if getattr(self, name) is not None
        ]
        if len(given) != 1:
            raise ValueError("give exactly one of --builtin, --file, --seed, --seed-range")
        if self.seed_range is not None:
            if self.command is not Command.VERIFY:
                raise ValueError("--seed-range only applies to verify")
            if self.seed_range[0] > self.seed_range[1]:
                raise ValueError("seed range is empty")
        return self

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        ideal = tuple(label for label in (args.ideal or "").split(",") if label)
        return cls(
            command=args.command,
            builtin=args.builtin,
            file=args.file,
            seed=args.seed,
            seed_range=args.seed_range,
            max_objects=args.max_objects,
            output_format=args.format,
            out=args.out,
            strict=args.strict,
            ideal=ideal,
            max_ideal_objects=args.max_ideal_objects,
            search_bound=args.search_bound,
        )


Outcome = Tuple[str, Dict[str, Any], bool]

EMITTERS: Dict[OutputFormat, Callable[[], DocumentEmitterInterface]] = {
    OutputFormat.JSON: JsonDocumentEmitter,
    OutputFormat.DOT: DotDocumentEmitter,
    OutputFormat.TEXT: TextDocumentEmitter,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("input (exactly one)")
    source.add_argument("--builtin", help=f"shipped system: {', '.join(builtin_names())}")
    source.add_argument("--file", help="system document; .json files are read as emitted JSON")
    source.add_argument("--seed", type=int, help="generate a random system from this seed")
    source.add_argument("--seed-range", help="verify every seed in A..B (inclusive)")
    common.add_argument("--max-objects", type=int, default=8, help="object limit for generated systems")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    common.add_argument("--out", help="write the document here instead of standard output")
    common.add_argument("--strict", action="store_true", help="fail when some prime is not completely prime")
    common.add_argument("--ideal", help="comma-separated labels generating the ideal (radical)")
    common.add_argument("--max-ideal-objects", type=int, default=16, help="largest system to enumerate")
    common.add_argument("--search-bound", type=int, default=12, help="largest space searched for homeomorphisms")

    parser = argparse.ArgumentParser(prog="ttframes", description="Finite tensor triangular frames and spectra")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        Command.VALIDATE: "check the structural axioms",
        Command.IDEALS: "lattice of thick tensor ideals",
        Command.PRIMES: "primality of every thick ideal",
        Command.RADICAL: "radical of an ideal by both methods",
        Command.ZAR: "Zariski frame of radical ideals",
        Command.SPC: "prime spectrum",
        Command.DUAL: "Hochster dual of the Zariski frame's space",
        Command.SUPPORT: "universal and prime-spectrum supports",
        Command.VERIFY: "run the theorem suite",
        Command.EMIT: "every structure at once",
    }
    for command, text in helps.items():
        sub.add_parser(command.value, parents=[common], help=text)
    return parser


def load_input(config: RunConfig) -> Tuple[TensorSystem, str]:
    loader = TextSystemLoader()
    if config.builtin is not None:
        return loader.builtin(config.builtin), config.builtin
    if config.file is not None:
        return loader.load_file(config.file), Path(config.file).name
    return random_system(config.seed, config.max_objects), f"seed:{config.seed}"


def _ideal(system: TensorSystem, labels: Sequence[str]):
    indices = []
    for label in labels:
        try:
            indices.append(system.index_of(label))
        except KeyError:
            raise UndeclaredObjectError(f"undeclared object {label}") from None
    return close(system, indices)


def _run_command(config: RunConfig, system: TensorSystem, name: str) -> Outcome:
    bound, search = config.max_ideal_objects, config.search_bound
    command = config.command
    if command is Command.VALIDATE:
        report = validate(system)
        return "validation", validation_document(system, report), report.ok
    if command is Command.IDEALS:
        return "ideals", ideals_document(system, bound), True
    if command is Command.PRIMES:
        return "primes", primes_document(system, bound), True
    if command is Command.RADICAL:
        return "radical", radical_document(system, _ideal(system, config.ideal)), True
    if command is Command.ZAR:
        return "zar", zar_document(system, bound), True
    if command is Command.SPC:
        return "spc", spc_document(system), True
    if command is Command.DUAL:
        return "dual", dual_document(system, bound, search), True
    if command is Command.SUPPORT:
        return "support", support_document(system, bound), True
    if command is Command.EMIT:
        return "bundle", bundle_document(system, bound, search), True
    response = create_pipeline(max_objects=bound, search_bound=search, strict=config.strict).verify(system, name)
    return "suite", response.to_dict(), response.passed


def _run_campaign(config: RunConfig) -> Outcome:
    first, last = config.seed_range
    use_case = create_pipeline(
        max_objects=config.max_ideal_objects, search_bound=config.search_bound, strict=config.strict
    )
    responses = use_case.run_campaign(range(first, last + 1), config.max_objects)
    passed = all(r.passed for r in responses)
    document = {
        "seeds": [r.to_dict() for r in responses],
        "passed": passed,
        "failed": [r.system_name for r in responses if not r.passed],
    }
    return "campaign", document, passed


def run(config: RunConfig) -> int:
    try:
        if config.seed_range is not None:
            kind, document, ok = _run_campaign(config)
        else:
            system, name = load_input(config)
            kind, document, ok = _run_command(config, system, name)
        text = EMITTERS[config.output_format]().render(kind, document)
    except INPUT_ERRORS as e:
        logger.debug("input error", exc_info=True)
        print(f"ttframes: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TTFramesError as e:
        print(f"ttframes: {config.command.value} failed: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED

    try:
        if config.out:
            Path(config.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except OSError as e:
        print(f"ttframes: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if ok else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig.from_args(args)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        print(f"ttframes: error: {messages}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
