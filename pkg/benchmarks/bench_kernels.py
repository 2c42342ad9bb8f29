"""Compare the compiled kernels with their pure-Python versions.

Run with ``python3 benchmarks/bench_kernels.py``; add ``--quick`` for fewer
repetitions and ``--end-to-end`` to time a whole search with each backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from spherelink import _kernels_py as pure
from spherelink.catalog import builtin
from spherelink.embedding import spherical_rotations
from spherelink.graph import generate_graphs

try:
    from spherelink import _kernels as compiled
except ImportError:
    compiled = None


def face_inputs(rng: random.Random, count: int = 200):
    out = []
    for _ in range(count):
        nf = rng.randint(4, 40)
        m = rng.randint(nf, 3 * nf)
        f1 = [rng.randrange(nf) for _ in range(m)]
        f2 = [rng.randrange(nf) for _ in range(m)]
        cut = [rng.random() < 0.2 for _ in range(m)]
        out.append((nf, f1, f2, cut))
    return out


def map_inputs():
    out = []
    for name in ("K4", "K5-e", "K311", "K42", "C6"):
        g = builtin(name)
        part = list(range(g.n))
        for rot in spherical_rotations(g, part):
            offsets, nbrs = [0], []
            for v in part:
                nbrs.extend(rot[v])
                offsets.append(len(nbrs))
            rev = []
            for x in part:
                for i in range(offsets[x], offsets[x + 1]):
                    w = nbrs[i]
                    rev.append(nbrs.index(x, offsets[w], offsets[w + 1]) - offsets[w])
            out.append((offsets, nbrs, rev, list(range(len(nbrs)))))
    return out


def refine_inputs():
    out = []
    for g in generate_graphs(7):
        nb = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
        out.append(([list(range(g.n))], nb))
    return out


def bench(label: str, fn_pure, fn_comp, inputs, number: int) -> None:
    def run(fn):
        return lambda: [fn(*args) for args in inputs]

    tp = min(timeit.repeat(run(fn_pure), number=number, repeat=3)) / number
    if fn_comp is None:
        print(f"{label:14} pure {tp * 1e3:9.2f} ms   compiled unavailable")
        return
    assert [fn_pure(*a) for a in inputs] == [fn_comp(*a) for a in inputs], label
    tc = min(timeit.repeat(run(fn_comp), number=number, repeat=3)) / number
    print(f"{label:14} pure {tp * 1e3:9.2f} ms   compiled {tc * 1e3:9.2f} ms   speedup {tp / tc:5.1f}x")


SEARCH = ["-m", "spherelink.cli", "search", "--link", "type1", "--max-vertices", "8", "--max-edges", "13"]


def end_to_end() -> None:
    """The type I search up to 8 vertices and 13 edges, compiled and pure."""
    for label, extra in (("compiled", {}), ("pure", {"SPHERELINK_PURE": "1"})):
        env = {**os.environ, **extra}
        t = time.perf_counter()
        subprocess.run([sys.executable, *SEARCH], env=env, check=True, capture_output=True)
        print(f"search type1 n<=8 m<=13  {label:8} {time.perf_counter() - t:7.1f} s")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--end-to-end", action="store_true", help="also time a full search both ways")
    args = ap.parse_args()
    number = 1 if args.quick else 5
    rng = random.Random(20261016)
    print(f"inputs: {len(face_inputs(random.Random(0)))} face problems, "
          f"{len(map_inputs())} rotation systems, {len(refine_inputs())} graphs")
    bench("face_classes", pure.face_classes, getattr(compiled, "face_classes", None),
          face_inputs(rng), number)
    bench("min_map_code", pure.min_map_code, getattr(compiled, "min_map_code", None),
          map_inputs(), number)
    bench("refine", pure.refine, getattr(compiled, "refine", None), refine_inputs(), number)
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
