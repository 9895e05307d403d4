"""Compare the Cython and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--number N]

The first group times the raw kernels on little-endian digit lists; the
second times library calls with each backend's functions patched into
``fara.kernels``.
"""

import argparse
import importlib
import random
import timeit

from fara import _pykernels, kernels, regnum, sexcore


def digits(n):
    out = []
    while n:
        n, d = divmod(n, 60)
        out.append(d)
    return out


def load_backends():
    found = {"python": _pykernels}
    try:
        found["cython"] = importlib.import_module("fara._ckernels")
    except ImportError:
        pass
    return found


def kernel_cases(k):
    rng = random.Random(0)
    a = digits(rng.getrandbits(1200))
    b = digits(rng.getrandbits(1200))
    d = digits(rng.getrandbits(300)) or [1]
    return {
        "add_mag 200 digits": lambda: k.add_mag(a, b),
        "mul_mag 200x200": lambda: k.mul_mag(a, b),
        "mul_small by 3,20": lambda: k.mul_small(a, 200),
        "divmod_small by 7": lambda: k.divmod_small(a, 7),
        "divmod_mag 200/50": lambda: k.divmod_mag(a, d),
    }


def library_cases():
    x = sexcore.parse_literal("1;20")
    big = sexcore.pow_int(sexcore.parse_literal("59;59,59"), 40)
    return {
        "pow (1;20)^200": lambda: sexcore.pow_int(x, 200),
        "big * big": lambda: big * big,
        "reciprocal_table(2000)": lambda: regnum.reciprocal_table(2000),
        "divmod 60^60 by 7^30": lambda: sexcore.divmod_int(
            sexcore.SexValue.from_int(60**60), sexcore.SexValue.from_int(7**30)
        ),
    }


KERNELS = ("cmp_mag", "add_mag", "sub_mag", "mul_small", "mul_mag", "divmod_small", "divmod_mag")


def swap(k):
    for name in KERNELS:
        setattr(kernels, name, getattr(k, name))


def time_it(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=3)) / number


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--number", type=int, default=20, help="calls per timing run")
    args = p.parse_args()
    backends = load_backends()
    names = list(backends)
    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'case':28}" + "".join(f"{n:>14}" for n in names) + ("     speedup" if len(names) > 1 else ""))

    rows = []
    for case in kernel_cases(_pykernels):
        rows.append((case, [time_it(kernel_cases(backends[n])[case], args.number) for n in names]))
    original = {name: getattr(kernels, name) for name in KERNELS}
    try:
        for case in library_cases():
            times = []
            for n in names:
                swap(backends[n])
                times.append(time_it(library_cases()[case], max(1, args.number // 4)))
            rows.append((case, times))
    finally:
        for name, fn in original.items():
            setattr(kernels, name, fn)

    for case, times in rows:
        line = f"{case:28}" + "".join(f"{t * 1e3:11.3f} ms" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
