"""Backend selection for the mod-p polynomial kernels.

The compiled extension is used when it was built; setting
AODE_PURE_PYTHON=1 forces the pure-Python twin.
"""
import os

BACKEND = "python"

if os.environ.get("AODE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._zmod import (zp_add, zp_divmod, zp_gcd, zp_monic, zp_mul, zp_mulmod,
                            zp_powmod, zp_reduce, zp_rem, zp_sub, zp_trim)
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._zmod_py import (zp_add, zp_divmod, zp_gcd, zp_monic, zp_mul, zp_mulmod,  # noqa: F401
                           zp_powmod, zp_reduce, zp_rem, zp_sub, zp_trim)
