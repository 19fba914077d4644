"""slicealg: exact-arithmetic workbench for slice-type spectral sequence
pages and the 2-local Weierstrass transformation algebroid.

Everything is computed over Z, Z localized at 2, or F2.  There are no
floating point numbers anywhere in the package.
"""

__version__ = "0.1.0"
