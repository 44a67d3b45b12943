from .decorators import pure
from .functions import file_get_contents, file_put_contents, parallel_map
from .structs import dictify, key_value_lines

__all__: list[str] = [
    "pure",
    "file_get_contents",
    "file_put_contents",
    "parallel_map",
    "dictify",
    "key_value_lines",
]
