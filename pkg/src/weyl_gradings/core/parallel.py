"""
Worker pool helper for the data-parallel enumerations.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Optional, Sequence, TypeVar

from ..config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    jobs: Optional[int] = None,
    chunksize: int = 16,
) -> List[R]:
    """
    Apply func to every item, optionally across worker processes.

    Results come back in input order regardless of the worker count, so
    callers get a deterministic merge.

    Args:
        func: Picklable module-level function
        items: Work items
        jobs: Worker count (defaults to the ``weyl.jobs`` setting); 1 runs inline
        chunksize: Items handed to a worker at once

    Returns:
        [func(item) for item in items]
    """
    if jobs is None:
        jobs = get_settings().weyl.jobs
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.info(f"Dispatching {len(items)} tasks to {jobs} workers")
    with Pool(processes=jobs) as pool:
        return pool.map(func, items, chunksize=chunksize)
