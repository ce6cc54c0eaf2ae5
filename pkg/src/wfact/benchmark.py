"""Timing comparison of the compiled and pure-Python oracle kernels.

Run as ``python -m wfact.benchmark [--m M --p P --n N --repeat K]``.
Builds the full multiplication table and the reflection-generated subgroup
closures with both backends, reports wall times, and asserts the outputs
are identical.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import _core_py
from ._kernels import BACKEND
from .groups import GroupParams, all_elements, identity, reflections

try:
    from . import _core
except ImportError:  # extension not built; benchmark still runs pure Python
    _core = None


def _element_arrays(params: GroupParams) -> tuple[np.ndarray, np.ndarray, int]:
    elements = list(all_elements(params))
    index = {g: i for i, g in enumerate(elements)}
    perms0 = np.array([[v - 1 for v in g.perm] for g in elements], dtype=np.int32)
    colors = np.array([list(g.colors) for g in elements], dtype=np.int32)
    return perms0, colors, index[identity(params)]


def _time(fn, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def run(params: GroupParams, repeat: int) -> int:
    print(f"group {params}: order {params.order}, "
          f"{params.num_reflections} reflections; active backend: {BACKEND}")
    perms0, colors, id_idx = _element_arrays(params)

    backends = [("python", _core_py)]
    if _core is not None:
        backends.append(("cython", _core))
    else:
        print("compiled extension not available; timing pure Python only")

    tables = {}
    for name, mod in backends:
        secs, mult = _time(lambda: mod.build_mult_table(perms0, colors, params.m), repeat)
        tables[name] = mult
        print(f"  build_mult_table [{name:7}] {secs * 1e3:9.2f} ms")

    mult = tables["python"]
    refl_elems = []
    elements = list(all_elements(params))
    index = {g: i for i, g in enumerate(elements)}
    for t in reflections(params):
        refl_elems.append(index[t.to_element(params)])

    closures = {}
    for name, mod in backends:
        def run_closures(mod=mod):
            return [
                mod.subgroup_closure(tables[name], [r], id_idx) for r in refl_elems
            ]
        secs, out = _time(run_closures, repeat)
        closures[name] = out
        print(f"  {len(refl_elems)} closures    [{name:7}] {secs * 1e3:9.2f} ms")

    if _core is not None:
        assert np.array_equal(tables["python"], tables["cython"]), "tables differ"
        for a, b in zip(closures["python"], closures["cython"]):
            assert np.array_equal(a, b), "closures differ"
        print("  backends agree on all outputs")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--p", type=int, default=1)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    return run(GroupParams(args.m, args.p, args.n), args.repeat)


if __name__ == "__main__":
    sys.exit(main())
