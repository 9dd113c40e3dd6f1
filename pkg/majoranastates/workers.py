# -*- coding: utf-8 -*-
"""
Running independent optimisation starts.
"""
from concurrent.futures import ThreadPoolExecutor

def run_starts(function, starts, parallel=False, max_workers=None):
    """Call the function once per start and return the results in order.

    With ``parallel`` the calls share a thread pool. The result order is
    the order of ``starts`` either way, so callers stay deterministic."""
    starts = list(starts)
    if not parallel or len(starts) < 2:
        return [function(start) for start in starts]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(function, starts))
