# core/parallel.py

from concurrent.futures import ThreadPoolExecutor

from .conf import lab_setting


def map_ordered(fn, items, threads=None):
    """
    list(map(fn, items)) that may fan out over KCLAB_THREADS workers.
    Results keep input order, so callers stay deterministic.
    """
    items = list(items)
    threads = threads or lab_setting('THREADS')
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
