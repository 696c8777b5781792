import os
from concurrent.futures import ProcessPoolExecutor


def resolve_jobs(jobs) -> int:
    if jobs in (None, "auto", 0):
        return os.cpu_count() or 1
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError("jobs must be >= 1 or 'auto'")
    return jobs


def pmap(fn, items, jobs=1):
    """Ordered map, fanned out to worker processes when jobs > 1."""
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))
