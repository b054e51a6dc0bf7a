from .fixture_codec import (
    decode_class,
    decode_graph,
    decode_graph_class,
    encode_class,
    encode_graph,
    encode_graph_class,
)
from .fixture_store import (
    FixtureStore,
    load_class,
    load_fixture,
    load_graph,
    save_fixture,
)
from .sample_store import load_sample, save_sample
from .transcript_store import TranscriptRow, TranscriptStore

__all__ = [
    "FixtureStore",
    "TranscriptRow",
    "TranscriptStore",
    "decode_class",
    "decode_graph",
    "decode_graph_class",
    "encode_class",
    "encode_graph",
    "encode_graph_class",
    "load_class",
    "load_fixture",
    "load_graph",
    "load_sample",
    "save_fixture",
    "save_sample",
]
