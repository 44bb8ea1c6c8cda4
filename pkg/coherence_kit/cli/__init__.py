from coherence_kit.cli.app import main, build_parser
from coherence_kit.cli.documents import ChannelDocument, FORMAT_VERSION

__all__ = ["main", "build_parser", "ChannelDocument", "FORMAT_VERSION"]
