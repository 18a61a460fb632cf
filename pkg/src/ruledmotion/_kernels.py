"""Select the coefficient kernel backend at import time.

The compiled Cython module is used when it was built; otherwise the
pure-Python implementation with the identical contract is loaded.
"""

try:
    from ._ckernels import add, divmod_, evaluate, hamilton, mul, sub

    BACKEND = "compiled"
except ImportError:  # extension not built
    from ._pykernels import add, divmod_, evaluate, hamilton, mul, sub

    BACKEND = "python"

__all__ = ["BACKEND", "add", "divmod_", "evaluate", "hamilton", "mul", "sub"]
