import functools
from typing import Callable, Optional, ParamSpec, TypeVar, Union, cast, overload

P = ParamSpec("P")
R = TypeVar("R")


@overload
def pure(
    func: Callable[P, R],
    *,
    cached: bool = ...,
    maxsize: Optional[int] = ...,
) -> Callable[P, R]: ...


@overload
def pure(
    func: None = ...,
    *,
    cached: bool = ...,
    maxsize: Optional[int] = ...,
) -> Callable[[Callable[P, R]], Callable[P, R]]: ...


def pure(
    func: Optional[Callable[P, R]] = None,
    *,
    cached: bool = False,
    maxsize: Optional[int] = None,
) -> Union[Callable[P, R], Callable[[Callable[P, R]], Callable[P, R]]]:
    """
    Marks a function as referentially transparent and optionally memoises it.

    Arguments of a cached function must be hashable; the frozen structs of
    this package are.

    Args:
        func: The function to decorate. Can be None if used with arguments.
        cached: Whether to memoise results. Defaults to False.
        maxsize: Maximum number of memoised results. Defaults to 4096.

    Raises:
        ValueError: If maxsize is given while cached is False.
    """

    def decorator(inner_func: Callable[P, R]) -> Callable[P, R]:
        if not cached:
            if maxsize is not None:
                raise ValueError("Cannot set maxsize when cached is False.")
            return inner_func

        decorated = functools.lru_cache(maxsize=4096 if maxsize is None else maxsize)(
            inner_func
        )
        return cast(Callable[P, R], functools.wraps(inner_func)(decorated))

    if func is None:
        return decorator
    return decorator(func)
