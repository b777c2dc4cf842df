# -*- coding: utf-8 -*-
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Sequence, Tuple, TypeVar

from sympy import primerange

from rigidconv.core.settings import thread_count

__all__ = ['parallel_map', 'primes_between', 'parse_range']

_log = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(func: Callable[[T], R], items: Sequence[T],
                 threads: int = None) -> List[R]:
    """
    Apply func to every item, fanning out over a thread pool.

    Results are returned in the order of items whatever the completion
    order, so output does not depend on the worker count.  With a single
    worker (or a single item) the work runs inline.

    Parameters
    ----------
    func : Callable
    items : Sequence
    threads : int, optional
        Worker count; defaults to :func:`rigidconv.core.settings.thread_count`
    """
    threads = thread_count() if threads is None else max(1, threads)
    if threads == 1 or len(items) <= 1:
        return [func(item) for item in items]

    results: List[R] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(func, item): i for i, item in enumerate(items)}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    _log.debug("parallel_map finished %d items on %d workers", len(items),
               threads)
    return results


def primes_between(lo: int, hi: int) -> List[int]:
    """Primes p with lo <= p <= hi"""
    return [int(p) for p in primerange(lo, hi + 1)]


def parse_range(text: str) -> Tuple[int, int]:
    """Parse ``"LO..HI"`` into an inclusive (lo, hi) pair"""
    lo, sep, hi = text.partition('..')
    if not sep:
        raise ValueError(f'expected a range LO..HI, got {text!r}')
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f'empty range {text!r}')
    return lo, hi
