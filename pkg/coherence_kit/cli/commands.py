"""
Subcommand implementations. Each returns the process exit code.
"""
from argparse import Namespace
import logging
import sys
from coherence_kit.config.settings import Settings
from coherence_kit.core.types import ChannelKind
from coherence_kit.core.errors import UnsupportedClass
from coherence_kit.core.channels import classify
from coherence_kit.regions import region_for
from coherence_kit.regions.io import IoRegion
from coherence_kit.regions.pio import PioRegion
from coherence_kit.regions.cpo import CpoRegion
from coherence_kit.synthesis import io_to_sio, synth_cpo, synth_io, synth_pio
from coherence_kit.oracle.cloud import reachable_cloud, summarize_cloud
from coherence_kit.cli.documents import ChannelDocument
from coherence_kit.cli.formatting import dumps_json, emit, parse_state, points_csv, state_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NOT_CONTAINED = 3
EXIT_NOT_INCOHERENT = 4
EXIT_NOT_TRACE_PRESERVING = 5


def _kind(name: str) -> ChannelKind:
    try:
        return ChannelKind.parse(name)
    except KeyError:
        raise UnsupportedClass(f"unknown operation class {name!r}")


def cmd_region(args: Namespace, settings: Settings) -> int:
    kind = _kind(args.op_class)
    source = parse_state(args.source, settings.state_tol)
    region = region_for(kind, source, settings.region_tol)

    if args.boundary is not None:
        if isinstance(region, IoRegion):
            points = region.boundary(args.boundary)
        elif isinstance(region, PioRegion):
            points = list(region.hexagon.vertices)
        else:
            assert isinstance(region, CpoRegion)
            points = list(region.orbit)
        if args.format == "json":
            emit(dumps_json([list(p) for p in points]), args.out)
        else:
            emit(points_csv(points), args.out)
        return EXIT_OK

    target = parse_state(args.target, settings.state_tol)
    report = region.contains(target)
    payload = {"class": kind.value, **report.to_dict()}
    emit(dumps_json(payload), args.out)
    return EXIT_OK if report.verdict else EXIT_NOT_CONTAINED


def cmd_synth(args: Namespace, settings: Settings) -> int:
    kind = _kind(args.op_class)
    source = parse_state(args.source, settings.state_tol)
    target = parse_state(args.target, settings.state_tol)
    metadata = {"class": kind.value, "source": state_list(source), "target": state_list(target)}

    if kind in (ChannelKind.IO, ChannelKind.SIO):
        kraus, solution = synth_io(source, target, settings.region_tol, settings.case_tol)
        metadata["solution"] = solution.to_dict()
    elif kind is ChannelKind.PIO:
        mixture = synth_pio(source, target, settings.region_tol)
        kraus = mixture.kraus()
        metadata["components"] = mixture.to_dict()
    elif kind is ChannelKind.CPO:
        kraus = synth_cpo(source, target, settings.region_tol)
    else:
        raise UnsupportedClass(f"cannot synthesize class {kind.value}")

    metadata["label"] = f"{kind.value} synthesis"
    emit(ChannelDocument.from_kraus(kraus, **metadata).dumps(), args.out)
    return EXIT_OK


def cmd_convert_sio(args: Namespace, settings: Settings) -> int:
    document = ChannelDocument.load(args.channel)
    state = parse_state(args.state, settings.state_tol)
    converted, solution = io_to_sio(document.to_kraus(), state, settings.pattern_tol, settings.completeness_tol)
    if solution is None:
        logger.debug("no row-paired operators, document passes through")
        emit(document.dumps(), args.out)
        return EXIT_OK
    metadata = {
        **document.metadata,
        "label": "SIO conversion",
        "state": state_list(state),
        "solution": solution.to_dict(),
    }
    emit(ChannelDocument.from_kraus(converted, **metadata).dumps(), args.out)
    return EXIT_OK


def cmd_verify(args: Namespace, settings: Settings) -> int:
    document = ChannelDocument.load(args.channel)
    ch = document.to_kraus()
    residual = ch.completeness_residual()
    report = {"trace_preserving": residual <= settings.completeness_tol, "residual": residual}
    if not report["trace_preserving"]:
        report["class"] = ChannelKind.NOT_TRACE_PRESERVING.value
        emit(dumps_json(report), args.out)
        return EXIT_NOT_TRACE_PRESERVING
    channel_class = classify(ch, settings.pattern_tol, settings.completeness_tol)
    report["class"] = channel_class.kind.value
    if channel_class.families:
        report["families"] = [{"family": f.value, "weight": w} for f, w in channel_class.families]
    emit(dumps_json(report), args.out)
    return EXIT_OK


def cmd_sample(args: Namespace, settings: Settings) -> int:
    source = parse_state(args.source, settings.state_tol)
    seed = settings.default_seed if args.seed is None else args.seed
    cloud = reachable_cloud(source, args.n, seed, args.max_kraus, settings, args.workers)
    emit(points_csv(cloud.points), args.out)

    report = dumps_json(summarize_cloud(cloud, settings).to_dict())
    if args.summary is not None:
        emit(report, args.summary)
    elif args.out not in (None, "-"):
        emit(report)
    else:
        # stdout already carries the CSV
        sys.stderr.write(report)
    return EXIT_OK
