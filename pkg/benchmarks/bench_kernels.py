"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from catkit import _kernels_py, models
from catkit.functor import identity_functor

try:
    from catkit import _kernels as compiled
except ImportError:
    compiled = None


def cases():
    fin = models.skeletal_finset(4)
    ident = identity_functor(fin).map
    div = models.poset_category(models.LatticeSpec.divisors(360))
    yield "category_axioms finset4", "category_axioms", (fin.exist, fin.dom, fin.cod, fin.comp)
    yield "category_axioms div360", "category_axioms", (div.exist, div.dom, div.cod, div.comp)
    yield "functor_composition finset4", "functor_composition", (ident, fin.comp, fin.comp, fin.exist)
    yield "naturality finset4", "naturality", (ident, ident, ident, fin.comp, fin.exist, fin.comp, fin.exist)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _kernels_py)] + ([("compiled", compiled)] if compiled else [])
    print(f"{'case':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn, argv in cases():
        times = []
        results = []
        for _, mod in backends:
            f = getattr(mod, fn)
            results.append(f(*argv))
            times.append(min(timeit.repeat(lambda: f(*argv), number=1, repeat=args.repeat)))
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
