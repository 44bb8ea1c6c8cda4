"""
coherence-kit command line.

Exit codes: 0 ok / contained, 1 usage, 2 invalid input, 3 unreachable or not
contained, 4 not incoherent, 5 not trace-preserving.
"""
from typing import Optional, Sequence
import argparse
import logging
import sys
from coherence_kit import __version__
from coherence_kit.config import presets
from coherence_kit.core.errors import CoherenceKitError
from coherence_kit.cli import commands
from coherence_kit.cli.commands import EXIT_INVALID, EXIT_USAGE

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# options whose value may start with a minus sign
STATE_OPTIONS = ("--from", "--to", "--state")


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def join_state_values(argv: Sequence[str]) -> list[str]:
    """Rewrite '--to -0.5,0.3' as '--to=-0.5,0.3' so argparse keeps the value"""
    joined: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in STATE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") and "," in argv[i + 1]:
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog="coherence-kit", description="Single-qubit coherence transformations")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--profile", choices=presets.names(), default="default", help="settings preset")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    region = sub.add_parser("region", help="region membership or boundary")
    region.add_argument("--class", dest="op_class", required=True, choices=["io", "sio", "pio", "cpo"])
    region.add_argument("--from", dest="source", required=True, metavar="Z,R[,THETA]")
    mode = region.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to", dest="target", metavar="Z,R[,THETA]")
    mode.add_argument("--boundary", type=int, metavar="N", help="enumerate N boundary points")
    region.add_argument("--format", choices=["json", "csv"], default="csv", help="boundary output format")
    region.add_argument("--out", help="output path (default stdout)")
    region.set_defaults(handler=commands.cmd_region)

    synth = sub.add_parser("synth", help="synthesize a channel")
    synth.add_argument("--class", dest="op_class", required=True, choices=["io", "sio", "pio", "cpo"])
    synth.add_argument("--from", dest="source", required=True, metavar="Z,R[,THETA]")
    synth.add_argument("--to", dest="target", required=True, metavar="Z,R[,THETA]")
    synth.add_argument("--out", help="output path (default stdout)")
    synth.set_defaults(handler=commands.cmd_synth)

    convert = sub.add_parser("convert-sio", aliases=["sio"], help="convert an IO document to SIO for a state")
    convert.add_argument("--channel", required=True, help="channel document path")
    convert.add_argument("--state", required=True, metavar="Z,R[,THETA]")
    convert.add_argument("--out", help="output path (default stdout)")
    convert.set_defaults(handler=commands.cmd_convert_sio)

    verify = sub.add_parser("verify", help="check completeness and classify a channel")
    verify.add_argument("--channel", required=True, help="channel document path")
    verify.add_argument("--out", help="output path (default stdout)")
    verify.set_defaults(handler=commands.cmd_verify)

    sample = sub.add_parser("sample", help="Monte-Carlo reachable cloud")
    sample.add_argument("--from", dest="source", required=True, metavar="Z,R[,THETA]")
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--seed", type=int, help="defaults to $COHERENCE_KIT_SEED, then 0")
    sample.add_argument("--max-kraus", type=int, default=4)
    sample.add_argument("--workers", type=int, help="worker processes")
    sample.add_argument("--out", help="CSV path (default stdout)")
    sample.add_argument("--summary", help="JSON summary path; defaults to stdout when --out is a file, stderr otherwise")
    sample.set_defaults(handler=commands.cmd_sample)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_state_values(sys.argv[1:] if argv is None else argv))
    configure_logging(args.verbose)
    try:
        settings = presets.get(args.profile).with_env()
        return args.handler(args, settings)
    except CoherenceKitError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
