"""Compare the compiled and pure-Python kernels on the workloads the checks run.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from pascaldet import _backend, build_pascal_table
from pascaldet.core_arrays import pascal_entry
from pascaldet.lgv import PathFamilySpec, iter_paths


def pascal_windows(k, n):
    t = build_pascal_table(n + k, n + k).entries
    return [tuple(tuple(t[i + a][j + b] for b in range(k)) for a in range(k)) for i in range(n) for j in range(n)]


def lgv_families(k, i, j):
    spec = PathFamilySpec.for_entry(k, i, j)
    height, x0 = j + k, i + k - 1
    fams = []
    for src, dst in zip(spec.sources, spec.sinks):
        fam = []
        for p in iter_paths(src, dst):
            m = 0
            for x, y in p:
                m |= 1 << ((x + x0) * height + y)
            fam.append(m)
        fams.append(fam)
    return fams


def workloads():
    tiny = pascal_windows(5, 12)  # every window takes the int64 path in the compiled kernel
    small = pascal_windows(5, 31)  # mixed: the far windows overflow int64
    big = pascal_windows(8, 40)  # large entries, exact object arithmetic
    huge = [tuple(tuple(pascal_entry(200 + a, 200 + b) for b in range(6)) for a in range(6))] * 200
    fams = lgv_families(3, 5, 5)
    return {
        "bareiss 5x5 Pascal windows, i,j<12 (144)": lambda k: [k.det_bareiss(m) for m in tiny],
        "bareiss 5x5 Pascal windows, i,j<31 (961)": lambda k: [k.det_bareiss(m) for m in small],
        "bareiss 8x8 Pascal windows (1600)": lambda k: [k.det_bareiss(m) for m in big],
        "bareiss 6x6 windows, ~120-bit entries (200)": lambda k: [k.det_bareiss(m) for m in huge],
        "condensation 5x5 Pascal windows (961)": lambda k: [k.det_condensation(m) for m in small],
        "LGV disjoint families k=3, i=j=5": lambda k: k.count_disjoint(fams),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available()
    if "compiled" not in backends:
        print("compiled kernels unavailable; only the Python fallback will be timed")
    print(f"{'workload':48} " + " ".join(f"{name:>12}" for name in backends) + "   speedup")
    for label, fn in workloads().items():
        results = {name: fn(k) for name, k in backends.items()}
        assert len({repr(r) for r in results.values()}) == 1, f"backends disagree on {label}"
        times = {name: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for name, k in backends.items()}
        speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else ""
        print(f"{label:48} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times.values()) + f"  {speed}")


if __name__ == "__main__":
    main()
