"""
Dirac-operator spectra of the fuzzy geometries.
"""

from src.services.dirac.dirac_manager import DiracManager
from src.services.dirac.spectrum import dirac_density, dirac_density_from_samples, dirac_sample

__all__ = [
    "DiracManager",
    "dirac_density",
    "dirac_density_from_samples",
    "dirac_sample",
]
