"""
Dirac manager: Dirac-operator densities of equilibrium measures.
"""

import uuid
from typing import Any, Dict, Optional

from config.config import Settings, get_settings
from src.enums import DiracSign, GeometryModel, RunStatus
from src.services.dirac.spectrum import dirac_density
from src.services.equilibrium import EquilibriumManager
from src.utils import format_structured_log, get_logger

logger = get_logger(__name__)


class DiracManager:
    """
    Manager for the spectral densities of D+ and D- at large N.
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        equilibrium: Optional[EquilibriumManager] = None,
    ):
        self.instance_id = str(uuid.uuid4())[:8]
        logger.info(f"Initializing DiracManager instance {self.instance_id}")
        self.settings = settings or get_settings()
        self.equilibrium = equilibrium or EquilibriumManager(self.settings)

    def run(self, model: GeometryModel, g: float, sign: DiracSign) -> Dict[str, Any]:
        """
        Dirac density of the selected equilibrium at (model, g).

        Raises:
            SelectionError: no equilibrium branch converged
            ResolutionError: DIRAC_GRID_POINTS below 512
        """
        solved = self.equilibrium.run_equilibrium(model, g)
        chosen = solved["selection"].chosen
        density = dirac_density(chosen.density, sign, points=self.settings.DIRAC_GRID_POINTS)
        logger.info(
            format_structured_log(
                "Dirac density computed",
                {
                    "model": model.value,
                    "g": g,
                    "sign": sign.value,
                    "ansatz": chosen.ansatz.value,
                    "grid_points": int(density.grid.size),
                    "mean": density.mean(),
                }
            )
        )
        return {
            "status": RunStatus.COMPLETED.value,
            "solution": chosen,
            "dirac": density,
        }
