#!/usr/bin/env python3
"""Compare the two scalar backends on representative verification workloads.

The rational backend is fixed at import time (``HOMNARY_SCALAR``), so each
measurement runs in a subprocess.  Workloads: the twisted fundamental
identity on the signed 4-ary bundle, the module conditions of a tensor
square, and a 60-candidate relative-operator grid.

    python benchmarks/bench_scalars.py
"""

import os
import subprocess
import sys
import time

WORKLOAD = r"""
import time
from homnary import scalars
from homnary.algebras import check_hom_nambu, check_n_hom_pre_lie
from homnary.fixtures import clifford_line, omitted_argument_nlie, signed_omitted_nlie
from homnary.operators import check_o_operator_lie, enumerate_even_maps
from homnary.representations import (adjoint_lie_representation,
                                     adjoint_pre_lie_representation,
                                     check_pre_lie_representation,
                                     semidirect_pre_lie, tensor_representation)
from homnary.scalars import Q

timings = {}

alg4 = signed_omitted_nlie(4)
t0 = time.perf_counter()
assert check_hom_nambu(alg4).ok
timings["hom_nambu n=4 dim=5"] = time.perf_counter() - t0

rep = adjoint_pre_lie_representation(clifford_line())
square = tensor_representation(rep, rep)
t0 = time.perf_counter()
assert check_pre_lie_representation(square).ok
assert check_n_hom_pre_lie(semidirect_pre_lie(square)).ok
timings["tensor square module conditions"] = time.perf_counter() - t0

lie = omitted_argument_nlie(3)
ad = adjoint_lie_representation(lie)
t0 = time.perf_counter()
count = 0
for T in enumerate_even_maps(lie.space, lie.space, [Q(-1), Q(1)], max_nonzero=2):
    check_o_operator_lie(T, ad)
    count += 1
    if count >= 60:
        break
timings["60-candidate operator grid"] = time.perf_counter() - t0

print(scalars.BACKEND)
for name, seconds in timings.items():
    print(f"{name}\t{seconds:.4f}")
"""


def measure(backend: str):
    env = dict(os.environ, HOMNARY_SCALAR=backend)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                          capture_output=True, text=True, check=True)
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == backend, f"backend {backend} unavailable: got {lines[0]}"
    return {name: float(seconds)
            for name, seconds in (line.split("\t") for line in lines[1:])}


def main() -> int:
    results = {}
    for backend in ("fraction", "gmpy2"):
        try:
            results[backend] = measure(backend)
        except (AssertionError, subprocess.CalledProcessError) as exc:
            print(f"skipping backend {backend}: {exc}", file=sys.stderr)
    if not results:
        return 1
    names = list(next(iter(results.values())))
    width = max(len(n) for n in names)
    header = "workload".ljust(width) + "".join(f"  {b:>10}" for b in results)
    if len(results) == 2:
        header += "  speedup"
    print(header)
    for name in names:
        row = name.ljust(width)
        for backend in results:
            row += f"  {results[backend][name]:>9.4f}s"
        if len(results) == 2:
            frac, fast = results["fraction"][name], results["gmpy2"][name]
            row += f"  {frac / fast:>6.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
