import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Sequence, TypeVar

from neighborly.config import worker_count

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> List[Sequence[T]]:
    return [items[start:start + size] for start in range(0, len(items), size)]


def parallel_map(fn: Callable[[T], R], tasks: Iterable[T], workers: int = 1) -> Iterator[R]:
    """Ordered map over tasks; a process pool when more than one worker is allowed.

    ``fn`` must be a module-level function so it can be pickled. Results come
    back in task order, so aggregation does not depend on scheduling.
    """
    workers = worker_count(workers)
    if workers <= 1:
        for task in tasks:
            yield fn(task)
        return
    logger.debug(f"Dispatching to {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for result in pool.map(fn, tasks):
            yield result
