import json
import logging
import time
from os import PathLike
from pathlib import Path

from api.exceptions import DataAccessError
from config import ENCODING
from utils.json_types import (
    JsonEncodableObject,
    JsonObject,
    freeze_json_object,
    is_json_object,
)

logger = logging.getLogger(__name__)


def get_json(
    filename: str | PathLike[str], encoding: str = ENCODING
) -> JsonObject | None:
    """Reads a JSON object file; None when it is missing or not a JSON object."""
    path = Path(filename)
    if not path.exists():
        return None
    try:
        with open(path, encoding=encoding) as data_file:
            payload: object = json.load(fp=data_file)  # pyright: ignore[reportAny]
            return payload if is_json_object(payload) else None
    except (json.JSONDecodeError, OSError):
        logger.warning("Unreadable JSON file %s", path)
        return None


def load_json(filename: str | PathLike[str], encoding: str = ENCODING) -> JsonObject:
    """Like get_json, but a missing or malformed file is an error."""
    data = get_json(filename, encoding)
    if data is None:
        raise DataAccessError(
            f"{filename} is missing or not a JSON object",
            user_message=f"Could not read JSON from {filename}",
        )
    return data


def dump_json(data: JsonEncodableObject) -> str:
    """Canonical text form: sorted keys, 4-space indent, trailing newline."""
    payload = freeze_json_object(data)
    return json.dumps(payload, sort_keys=True, indent=4, ensure_ascii=False) + "\n"


def save_json(
    filename: str | PathLike[str],
    data: JsonEncodableObject,
    encoding: str = ENCODING,
) -> None:
    """Writes the canonical form through a temp file and an atomic replace."""
    text = dump_json(data)
    path = Path(filename)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = path.with_stem(f"{path.stem}_temp")

    max_retries = 3
    for attempt in range(max_retries):
        try:
            temp_path.write_text(text, encoding=encoding)
            temp_path.replace(path)
            return
        except OSError as e:
            if attempt == max_retries - 1:
                raise DataAccessError(f"Could not write {path}: {e}") from e
            time.sleep(0.1 * (attempt + 1))
            try:
                if temp_path.exists():
                    temp_path.unlink()
            except OSError:
                pass
