import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Hashable, Iterable, TypeVar

from qrac_lab.utils.config import setting
from qrac_lab.utils.logging import get_logger

K = TypeVar('K', bound=Hashable)
V = TypeVar('V')

ENV_QRAC_LAB_THREADS = "QRAC_LAB_THREADS"


def thread_count(threads: int = None) -> int:
    """Worker count for sweeps: explicit argument, then QRAC_LAB_THREADS,
    then the config file."""
    if threads is None:
        env_threads = os.getenv(ENV_QRAC_LAB_THREADS)
        if env_threads:
            threads = int(env_threads)
    return max(1, setting("parallel", "threads", int, threads))


def sweep(
        task: Callable[[K], V],
        keys: Iterable[K],
        threads: int = None
    ) -> Dict[K, V]:
    """Evaluates task for every key and merges the results by key.

    Tasks must not share mutable state. The merged dict is ordered like
    keys regardless of the completion order, so results are reproducible
    for any thread count.
    """
    keys = list(keys)
    workers = thread_count(threads)
    get_logger(__name__).debug(f"sweeping {len(keys)} keys on {workers} thread(s)")
    if workers == 1 or len(keys) < 2:
        return {key: task(key) for key in keys}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        values = list(executor.map(task, keys))
    return dict(zip(keys, values))
