"""fibspec: exact spectra and anomaly ledgers for declarative elliptic
fibration models with terminal singular points.

Subpackages:
    localring  exact polynomials, local standard bases, Milnor/Tyurina numbers
    liealg     root data, weight systems, the fiber-type table, branching
    geometry   base lattices, genus formulas, Kodaira-Tate classification
    spectra    model assembly, the R-invariant identity, the anomaly ledger
    cli        model-document ingestion and report emission
"""

__version__ = "0.1.0"
