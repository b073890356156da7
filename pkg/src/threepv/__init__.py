"""threepv: exact-arithmetic verification of three-point current and
Virasoro-type algebras and their Fock-space realizations.

Everything is computed over exact rationals; a check passes only when the
residual is identically zero.
"""

__version__ = "0.1.0"
