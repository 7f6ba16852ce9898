"""symconf: symmetric configurations v_k and their incidence matrices.

Construction of cyclic symmetric configurations from modular Golomb
rulers (Singer, Bose, Ruzsa difference sets), block double-circulant
decompositions, extension procedures that grow v at fixed k, parameter
spectrum tables with existence/non-existence verdicts, and export of
incidence matrices as girth->=6 quasi-cyclic LDPC parity-check matrices
in alist format.

Submodules: ``gf`` (finite fields), ``ruler`` (modular Golomb rulers),
``construct`` (Singer/Bose/Ruzsa builders), ``matrix`` (incidence
matrices, formats), ``bdc`` (block double-circulant forms), ``extend``
(extension procedure), ``catalog`` (bounds, families, spectra),
``cli`` (command line).
"""

from __future__ import annotations

from .errors import SymconfError

__all__ = ["SymconfError", "__version__"]

__version__ = "0.1.0"
