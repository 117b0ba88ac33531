# shenlarsson/utils.py

from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from contextvars import ContextVar

from .conf import hamlie_setting
from .linalg import as_scalar


_worker_limit = ContextVar('worker_limit', default=None)


@contextmanager
def worker_limit(threads):
    """Cap parallel_map at ``threads`` workers inside the block."""
    token = _worker_limit.set(threads)
    try:
        yield
    finally:
        _worker_limit.reset(token)


def _serial_map(fn, items):
    return [fn(item) for item in items]


@contextmanager
def worker_pool(threads=None):
    """Order-preserving map over one executor shared by the whole block."""
    threads = threads or _worker_limit.get() or hamlie_setting('THREADS')
    if threads <= 1:
        yield _serial_map
        return
    with ThreadPoolExecutor(max_workers=threads) as executor:
        yield lambda fn, items: list(executor.map(fn, items))


def parallel_map(fn, items, threads=None):
    """Order-preserving map, spread over at most ``threads`` workers."""
    items = list(items)
    if len(items) < 2:
        return _serial_map(fn, items)
    with worker_pool(threads) as pool_map:
        return pool_map(fn, items)


def grade_key(grade):
    return ','.join(str(int(g)) for g in grade)


def is_integral(vector):
    return all(as_scalar(v).denominator == 1 for v in vector)


def random_lattice_vector(rng, length, radius, nonzero=False):
    while True:
        v = tuple(rng.randint(-radius, radius) for _ in range(length))
        if not nonzero or any(v):
            return v


def random_rational(rng, radius, denominators):
    q = rng.choice(denominators)
    return as_scalar(f'{rng.randint(-radius * q, radius * q)}/{q}')


def random_generic_vector(rng, length, radius=3, denominators=None):
    """A rational vector guaranteed to lie outside Z^length."""
    denominators = denominators or hamlie_setting('GENERIC_DENOMINATORS')
    values = [random_rational(rng, radius, denominators) for _ in range(length)]
    if is_integral(values):
        q = rng.choice(denominators)
        values[rng.randrange(length)] += as_scalar(f'1/{q}')
    return tuple(values)


def random_payload(rng, dim, radius=3):
    return tuple(as_scalar(rng.randint(-radius, radius)) for _ in range(dim))
