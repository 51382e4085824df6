"""Backend selection: compiled vs pure kernels, gmpy2 vs Fraction rationals.

``EDVAR_PURE_PYTHON=1`` forces the pure-Python kernels *and* Fraction
coefficients (a fully interpreter-only stack).  Otherwise the compiled
extension and gmpy2 are used when importable, falling back silently.
"""

from __future__ import annotations

import os
from fractions import Fraction

_FORCE_PURE = os.environ.get("EDVAR_PURE_PYTHON", "") not in ("", "0")

if _FORCE_PURE:
    from . import _kernels_py as K
else:
    try:
        from . import _speedups as K  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as K  # type: ignore[no-redef]

if _FORCE_PURE:
    _mpq = None
else:
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:
        _mpq = None

if _mpq is not None:
    Rational = _mpq

    def rat(p, q=1):
        return _mpq(p, q)

else:
    Rational = Fraction

    def rat(p, q=1):
        return Fraction(p, q)


R0 = rat(0)
R1 = rat(1)


def rat_num(x) -> int:
    return int(x.numerator)


def rat_den(x) -> int:
    return int(x.denominator)


def is_rational(x) -> bool:
    return isinstance(x, (Rational, Fraction, int))


def backend_info() -> dict:
    return {
        "kernels": K.BACKEND_NAME,
        "rationals": "gmpy2" if _mpq is not None else "fractions",
    }
