from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import TypeGuard, cast

type JsonPrimitive = str | int | float | bool | None
type JsonArray = list["JsonValue"]
type JsonObject = dict[str, "JsonValue"]
type JsonValue = JsonPrimitive | JsonArray | JsonObject

type JsonEncodable = (
    JsonPrimitive | Sequence["JsonEncodable"] | Mapping[str, "JsonEncodable"]
)
type JsonEncodableObject = Mapping[str, JsonEncodable]


def is_json_value(value: object) -> TypeGuard[JsonValue]:
    if value is None or isinstance(value, (str, int, float, bool)):
        return True
    if isinstance(value, list):
        return all(is_json_value(item) for item in cast(list[object], value))
    if isinstance(value, dict):
        items = cast(dict[object, object], value)
        return all(isinstance(k, str) and is_json_value(v) for k, v in items.items())
    return False


def is_json_object(value: object) -> TypeGuard[JsonObject]:
    return isinstance(value, dict) and is_json_value(cast(object, value))


def freeze_json(value: JsonEncodable) -> JsonValue:
    """Copy a JSON-encodable value into plain dicts, lists and primitives.

    Tuples become lists, so manifests and configs compare equal after a
    write/read round trip.
    """
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, Mapping):
        out: JsonObject = {}
        for k, v in cast(Mapping[object, object], value).items():
            if not isinstance(k, str):
                raise TypeError("JSON object keys must be str")
            out[k] = freeze_json(cast(JsonEncodable, v))
        return out
    if isinstance(value, (bytes, bytearray)):
        raise TypeError(f"Value is not JSON-encodable: {type(value)!r}")
    return [freeze_json(cast(JsonEncodable, x)) for x in cast(Sequence[object], value)]


def freeze_json_object(value: JsonEncodableObject) -> JsonObject:
    out = freeze_json(value)
    if not isinstance(out, dict):
        raise TypeError("Top-level JSON must be an object (mapping)")
    return out


def field_int(data: JsonObject, key: str) -> int | None:
    """data[key] when it is an int (bools excluded), else None."""
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        return None
    return value


def field_str(data: JsonObject, key: str) -> str | None:
    value = data.get(key)
    return value if isinstance(value, str) else None


def field_int_list(data: JsonObject, key: str) -> list[int] | None:
    value = data.get(key)
    if not isinstance(value, list):
        return None
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        return None
    return cast(list[int], value)


def field_float(data: JsonObject, key: str) -> float | None:
    """data[key] as a float when it is any JSON number (bools excluded), else None."""
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int | float):
        return None
    return float(value)
