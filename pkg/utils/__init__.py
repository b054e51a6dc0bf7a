from utils.json_utils import dump_json, get_json, load_json, save_json
from utils.logging_setup import setup_logging
from utils.suggestions import lookup, suggest

__all__ = [
    "dump_json",
    "get_json",
    "load_json",
    "lookup",
    "save_json",
    "setup_logging",
    "suggest",
]
