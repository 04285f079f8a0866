"""Systematic encoder for Hermitian codes over GF(q^2).

Thin wrapper around the compiled extension; see the project README for the
underlying construction and the command line tool.
"""

try:
    from ._hermenc import *  # noqa: F401,F403  (installed package layout)
    from ._hermenc import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _hermenc import *  # noqa: F401,F403
