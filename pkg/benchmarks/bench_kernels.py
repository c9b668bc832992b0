"""Compare the compiled and pure-Python kernels on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

import numpy as np

from slimhex import _kernels, catalog


def _cases():
    rng = random.Random(0)
    for nrows, ncols in ((200, 64), (759, 759), (2916, 729)):
        rows = [rng.getrandbits(ncols) for _ in range(nrows)]
        yield f"rank {nrows}x{ncols}", _kernels.rank, (rows, ncols)
        yield f"rref {nrows}x{ncols}", _kernels.rref, (rows, ncols)
    for key in ("hex_vii", "hex_ii", "hex_i"):
        g = catalog.build(key)
        nb = g.neighbours
        indptr = np.zeros(g.num_points + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(x) for x in nb])
        indices = np.array([y for x in nb for y in x], dtype=np.int32)
        yield f"distances {key} ({g.num_points} pts)", _kernels.distances, (g.num_points, indptr, indices)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = _kernels.available_backends()
    before = _kernels.BACKEND
    print(f"{'case':<34}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    try:
        for name, fn, fargs in _cases():
            times = {}
            for b in backends:
                _kernels.use_backend(b)
                times[b] = min(timeit.repeat(lambda: fn(*fargs), number=1, repeat=args.repeat))
            speed = times["python"] / times["cython"] if "cython" in times else float("nan")
            print(f"{name:<34}" + "".join(f"{times[b] * 1e3:>10.1f}ms" for b in backends) + f"{speed:>9.1f}x")
    finally:
        _kernels.use_backend(before)


if __name__ == "__main__":
    main()
