import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Optional


def file_get_contents(filename: Optional[str]) -> str:
    """Reads a whole text file; ``None`` or ``"-"`` reads standard input."""
    if filename is None or filename == "-":
        return sys.stdin.read()
    return Path(filename).read_text(encoding="utf-8")


def file_put_contents(filename: Optional[str], contents: str) -> None:
    """Writes text to a file; ``None`` or ``"-"`` writes standard output."""
    if filename is None or filename == "-":
        sys.stdout.write(contents)
        return
    Path(filename).write_text(contents, encoding="utf-8")


def parallel_map[T, R](
    func: Callable[[T], R], items: Iterable[T], jobs: int = 1
) -> list[R]:
    """
    Maps ``func`` over ``items`` on a thread pool, preserving order.

    Args:
        func: A pure function; it must not mutate shared state.
        items: The inputs.
        jobs: Worker count. ``1`` runs inline without a pool.

    Returns:
        The results in input order.
    """
    materialised = list(items)
    if jobs <= 1 or len(materialised) <= 1:
        return [func(item) for item in materialised]

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, materialised))
