"""Worker pool for independent solves."""

import logging
import os
from typing import Callable, List, Optional, Sequence, TypeVar

from joblib import Parallel, delayed

from handsoff.core.exceptions import BadInputError

logger = logging.getLogger(__name__)

THREADS_ENV = "HANDSOFF_THREADS"

Item = TypeVar("Item")
Result = TypeVar("Result")


def resolve_threads(threads: Optional[int] = None) -> int:
    """Returns the number of worker threads to use.

    Args:
        threads: Explicit count (e.g., from a command-line flag). Takes
          precedence over the HANDSOFF_THREADS environment variable.

    Raises:
        BadInputError: if the count is not a positive integer.

    Returns:
        The count; 1 when neither source is set.
    """
    if threads is None:
        configured = os.environ.get(THREADS_ENV, "").strip()
        if not configured:
            return 1
        try:
            threads = int(configured)
        except ValueError:
            raise BadInputError(
                f"{THREADS_ENV} must be an integer, got {configured!r}."
            )
    if threads < 1:
        raise BadInputError(f"Thread count must be positive, got {threads}.")
    return threads


def run_parallel(
    fn: Callable[[Item], Result], items: Sequence[Item], threads: int = 1
) -> List[Result]:
    """Applies fn to every item, possibly on several threads.

    Args:
        fn: Function of one item. Must not depend on shared mutable state.
        items: Items to process.
        threads: Number of worker threads.

    Returns:
        Results in the order of the items.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"Dispatching {len(items)} jobs to {threads} threads")
    return Parallel(n_jobs=threads, prefer="threads")(
        delayed(fn)(item) for item in items
    )
