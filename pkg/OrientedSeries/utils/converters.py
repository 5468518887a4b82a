"""
Conversion utilities for reports, certificates and scenario results.
"""

import json
from dataclasses import asdict, is_dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from pydantic import BaseModel

from ..models.certificate import InversionCertificate


def to_dict(obj: Any) -> Dict[str, Any]:
    """Convert a model or dataclass to a JSON-compatible dictionary.

    Args:
        obj: The object to convert

    Returns:
        Dictionary representation; enums become their values
    """
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    if is_dataclass(obj) and not isinstance(obj, type):
        return json.loads(to_json(obj))
    return obj


def to_json(obj: Any, indent: Optional[int] = None) -> str:
    """Convert an object to a JSON string.

    Args:
        obj: The object to convert
        indent: Optional indentation level
    """
    if isinstance(obj, BaseModel):
        return obj.model_dump_json(indent=indent)

    def default_serializer(o: Any) -> Any:
        if isinstance(o, BaseModel):
            return o.model_dump(mode="json")
        if is_dataclass(o) and not isinstance(o, type):
            return asdict(o)
        return str(o)

    return json.dumps(obj, default=default_serializer, indent=indent)


def _scalar_text(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def flatten(value: Any, prefix: str = "") -> List[tuple]:
    """Flatten nested dicts and lists into (dotted key, value) pairs.

    Dict keys keep insertion order and list items are keyed by index, so the
    result is stable for identical inputs. Empty containers yield one pair
    with the value ``[]`` or ``{}``.
    """
    if isinstance(value, dict):
        if not value:
            return [(prefix, "{}")]
        pairs = []
        for key, item in value.items():
            pairs.extend(flatten(item, f"{prefix}.{key}" if prefix else str(key)))
        return pairs
    if isinstance(value, (list, tuple)):
        if not value:
            return [(prefix, "[]")]
        pairs = []
        for i, item in enumerate(value):
            pairs.extend(flatten(item, f"{prefix}.{i}" if prefix else str(i)))
        return pairs
    return [(prefix, _scalar_text(value))]


def to_report_lines(obj: Union[BaseModel, Dict[str, Any]], prefix: str = "") -> List[str]:
    """Render a model as ``key: value`` lines in field-declaration order.

    Certificates are rendered with their traces truncated to the first
    entries plus the last one.
    """
    if isinstance(obj, InversionCertificate):
        obj = obj.for_report()
    data = to_dict(obj) if isinstance(obj, BaseModel) else obj
    return [f"{key}: {value}" for key, value in flatten(data, prefix)]


def write_report(path: str, blocks: Iterable[Sequence[str]]) -> None:
    """Write report blocks to ``path``, separated by blank lines."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n\n".join("\n".join(block) for block in blocks))
        handle.write("\n")


def to_dataframe(
    data: Union[BaseModel, Dict[str, Any], List[BaseModel], List[Dict[str, Any]]],
) -> "pandas.DataFrame":
    """Convert models or dicts to a pandas DataFrame.

    Raises:
        ImportError: If pandas is not installed
    """
    try:
        import pandas as pd
    except ImportError:
        raise ImportError(
            "pandas is required for this functionality. "
            "Install it with 'pip install orientedseries[pandas]'."
        )

    if not isinstance(data, list):
        data = [data]
    return pd.DataFrame([to_dict(item) if isinstance(item, BaseModel) else item for item in data])


def trace_dataframe(certificate: InversionCertificate) -> "pandas.DataFrame":
    """One row per step with the partial sum and the residual (or its seminorm).

    Raises:
        ImportError: If pandas is not installed
    """
    residuals = {entry.n: entry.value for entry in certificate.residual_trace}
    rows = [
        {"n": entry.n, "partial_sum": entry.value, "residual": residuals.get(entry.n)}
        for entry in certificate.partial_sums
    ]
    return to_dataframe(rows)
