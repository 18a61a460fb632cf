"""Compare the compiled and pure-Python coefficient kernels.

Run with ``python benchmarks/bench_kernels.py``. Prints per-kernel timings on
random exact and float inputs and an end-to-end synthesis timing with each
backend swapped in.
"""

from __future__ import annotations

import random
import timeit
from fractions import Fraction

from ruledmotion import _kernels, _pykernels

try:
    from ruledmotion import _ckernels
except ImportError:
    _ckernels = None

NAMES = ("add", "sub", "mul", "divmod_", "hamilton", "evaluate")


def _inputs(exact: bool, n: int, rng: random.Random):
    if exact:
        return [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(n)]
    return [rng.uniform(-5, 5) for _ in range(n)]


def bench_kernel(mod, exact: bool, n: int = 12, reps: int = 2000) -> float:
    rng = random.Random(1)
    a, b = _inputs(exact, n, rng), _inputs(exact, n // 2, rng)
    b[-1] = b[-1] or 1
    return min(timeit.repeat(lambda: mod.mul(a, b), number=reps, repeat=3)) / reps


def bench_synthesis(mod, reps: int = 5) -> float:
    from ruledmotion.dual import synthesize
    from ruledmotion.lines import validate_line_poly
    from ruledmotion.polynomial import parse_poly as pp
    from ruledmotion.quaternion import QuatPoly

    saved = {name: getattr(_kernels, name) for name in NAMES}
    for name in NAMES:
        setattr(_kernels, name, getattr(mod, name))
    try:
        h = pp("t^2-6t+10")
        L = validate_line_poly(
            QuatPoly(0, pp("2t^3-4t^2+2t-14") * h, -pp("2t^3-6t^2+4t+8") * h, pp("t^4+t^2+14t-8") * h),
            QuatPoly(0, pp("112t"), pp("t^6-51t^2+42t-104"), pp("2t^5-6t^4+2t^3-14t^2-4t+104")),
        )
        return min(timeit.repeat(lambda: synthesize(L), number=reps, repeat=3)) / reps
    finally:
        for name, fn in saved.items():
            setattr(_kernels, name, fn)


def main() -> None:
    print(f"active backend: {_kernels.BACKEND}")
    backends = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    for label, exact in (("mul exact", True), ("mul float", False)):
        times = {name: bench_kernel(mod, exact) for name, mod in backends}
        row = "  ".join(f"{name} {t * 1e6:8.2f} us" for name, t in times.items())
        print(f"{label:<12} {row}")
    times = {name: bench_synthesis(mod) for name, mod in backends}
    row = "  ".join(f"{name} {t * 1e3:8.2f} ms" for name, t in times.items())
    print(f"{'synthesize':<12} {row}")


if __name__ == "__main__":
    main()
