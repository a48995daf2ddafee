"""Exact-arithmetic apolar algebras, graded cotangent invariants, and
non-reducedness certificates.

The heavy lifting happens in the C++ extension ``_apolar``; every function
takes polynomial strings (variables are inferred from the text, uppercase
names alias the lowercase ones) and returns plain Python data.
"""

try:
    from ._apolar import *  # noqa: F401,F403
    from ._apolar import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension on PYTHONPATH next to the build tree
    from _apolar import *  # noqa: F401,F403

__version__ = "0.1.0"
