from fractions import Fraction
from typing import Any

import msgspec


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    raise NotImplementedError(f"cannot encode {type(value).__name__}")


def dictify(struct: msgspec.Struct) -> dict[str, Any]:
    """
    Create a dictionary from a struct, keeping field order.

    Keys are the encoded field names, so a struct declared with
    ``rename="camel"`` yields camelCase keys. Rationals become ``num/den``.
    """
    return msgspec.to_builtins(struct, enc_hook=_encode)


def render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def key_value_lines(struct: msgspec.Struct) -> str:
    """Machine-readable ``key=value`` lines, one per struct field."""
    return "".join(
        f"{key}={render_value(value)}\n" for key, value in dictify(struct).items()
    )
