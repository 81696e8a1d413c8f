"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on a fixed seeded workload with both backends and
reports the speedup. The full-pipeline row runs certificate generation in a
subprocess per backend, since the backend is chosen at import.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from discpf import constructions, kernels
from discpf.selftest import random_matrix, random_skew

PIPELINE = (
    "from discpf.constructions import random_ring\n"
    "from discpf.stickelberger import stickelberger_check\n"
    "for s in range(200): stickelberger_check(random_ring(s))\n"
)


def workloads():
    rng = random.Random(0)
    dets = [random_matrix(rng, 12).tolist() for _ in range(50)]
    pfs = [random_skew(rng, 16).tolist() for _ in range(20)]
    dpfs = [random_matrix(rng, 14).tolist() for _ in range(20)]
    tables = [[list(map(list, row)) for row in constructions.random_ring(s).products] for s in range(40)]
    return {
        "det 12x12 (x50)": ("det", dets),
        "pfaffian 16x16 (x20)": ("pfaffian", pfs),
        "dpf 14x14 (x20)": ("dpf", dpfs),
        "assoc_defect rank<=12 (x40)": ("assoc_defect", tables),
    }


def time_kernel(module, name, inputs, repeat):
    fn = getattr(module, name)
    return min(timeit.repeat(lambda: [fn(x) for x in inputs], number=1, repeat=repeat))


def time_pipeline(pure, repeat):
    env = dict(os.environ)
    env.pop("DISCPF_PURE_PYTHON", None)
    if pure:
        env["DISCPF_PURE_PYTHON"] = "1"
    stmt = f"import timeit; print(min(timeit.repeat({PIPELINE!r}, number=1, repeat={repeat})))"
    out = subprocess.run([sys.executable, "-c", stmt], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the pure-Python kernels are available")
    cols = sorted(backends, reverse=True)
    print(f"{'workload':32}" + "".join(f"{c:>12}" for c in cols) + f"{'speedup':>10}")
    for label, (name, inputs) in workloads().items():
        times = {c: time_kernel(backends[c], name, inputs, args.repeat) for c in cols}
        # results must agree before timings mean anything
        ref = [getattr(backends["python"], name)(x) for x in inputs]
        for c in cols:
            assert [getattr(backends[c], name)(x) for x in inputs] == ref, (c, name)
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
        print(f"{label:32}" + "".join(f"{times[c]:11.4f}s" for c in cols) + f" {speed}")
    if "cython" in backends:
        fast, slow = time_pipeline(False, args.repeat), time_pipeline(True, args.repeat)
        print(f"{'certificates, 200 random rings':32}{slow:11.4f}s{fast:11.4f}s {slow / fast:9.1f}x")


if __name__ == "__main__":
    main()
