# shenlarsson/tests/test_utils.py
import random
import threading

from django.test import SimpleTestCase, override_settings

from shenlarsson.hamiltonian import ModuleParams, graded
from shenlarsson.reps import natural_rep
from shenlarsson.submodules import Box, GeneratorSet, closure
from shenlarsson.symplectic import build_sp
from shenlarsson.utils import is_integral, parallel_map, random_generic_vector, worker_limit, worker_pool


class WorkerPoolTests(SimpleTestCase):
    def test_serial_by_default(self):
        with worker_pool() as pool_map:
            names = pool_map(lambda _: threading.current_thread().name, range(4))
        self.assertEqual(set(names), {threading.current_thread().name})

    def test_order_is_preserved(self):
        items = list(range(50))
        with worker_pool(4) as pool_map:
            self.assertEqual(pool_map(lambda x: x * x, items), [x * x for x in items])
        self.assertEqual(parallel_map(str, items, threads=3), [str(x) for x in items])

    def test_worker_limit_applies_inside_block(self):
        with worker_limit(3):
            with worker_pool() as pool_map:
                self.assertEqual(pool_map(abs, [-1, 2, -3]), [1, 2, 3])
        self.assertEqual(parallel_map(abs, [-4]), [4])

    @override_settings(HAMLIE={'THREADS': 2})
    def test_threads_from_settings(self):
        self.assertEqual(parallel_map(lambda x: x + 1, range(5)), [1, 2, 3, 4, 5])

    def test_closure_is_independent_of_threads(self):
        p = ModuleParams(('1/3', '1/5'), (0, 0), natural_rep(build_sp(1)))
        box, gens = Box(2, 2), GeneratorSet(1, 2)
        seeds = [graded((0, 0), (1, 0))]
        serial = closure(seeds, p, box, gens, threads=1)
        threaded = closure(seeds, p, box, gens, threads=2)
        self.assertEqual(serial.spaces, threaded.spaces)


class RandomVectorTests(SimpleTestCase):
    def test_generic_vectors_are_not_integral(self):
        rng = random.Random(5)
        for _ in range(100):
            self.assertFalse(is_integral(random_generic_vector(rng, 3)))
