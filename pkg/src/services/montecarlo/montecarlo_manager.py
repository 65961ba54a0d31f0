"""
Monte-Carlo manager: builds chain configurations from settings, runs chains
and summarises them.
"""

import uuid
from typing import Any, Dict, List, Optional

import numpy as np

from config.config import Settings, get_settings
from src.enums import GeometryModel, InitMode, RunStatus
from src.models import McConfig, McTrace, SpectralDensity
from src.services.montecarlo.checkpoint import read_checkpoint, write_checkpoint
from src.services.montecarlo.histogram import empirical_density
from src.services.montecarlo.metropolis import run_chain
from src.utils import (
    ValidationError,
    format_structured_log,
    get_logger,
    log_function_call,
)

logger = get_logger(__name__)


class MonteCarloManager:
    """
    Manager for Metropolis chains over eigenvalue configurations.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.instance_id = str(uuid.uuid4())[:8]
        logger.info(f"Initializing MonteCarloManager instance {self.instance_id}")
        self.settings = settings or get_settings()

    def build_config(
        self,
        model: GeometryModel,
        n: int,
        g: float = 0.0,
        sweeps: Optional[int] = None,
        burnin: Optional[int] = None,
        width: Optional[float] = None,
        seed: Optional[int] = None,
        init: InitMode = InitMode.EVEN,
        init_density: Optional[SpectralDensity] = None,
        init_values: Optional[List[float]] = None,
        positive_trace: bool = False,
    ) -> McConfig:
        """
        Chain configuration with unset values taken from the settings.

        Raises:
            ValidationError: inconsistent configuration
        """
        s = self.settings
        sweeps = s.MC_SWEEPS if sweeps is None else sweeps
        burnin = s.MC_BURNIN if burnin is None else burnin
        if burnin >= sweeps:
            burnin = sweeps // 10
            logger.warning(f"Burn-in reduced to {burnin} sweeps to leave a sampling phase")
        try:
            return McConfig(
                model=model,
                g=0.0 if model is GeometryModel.GAUSSIAN_BASELINE else g,
                n=n,
                sweeps=sweeps,
                burnin=burnin,
                width=s.MC_WIDTH if width is None else width,
                seed=s.MC_SEED if seed is None else seed,
                init=init,
                init_density=init_density,
                init_values=init_values,
                positive_trace=positive_trace,
                sample_interval=s.MC_SAMPLE_INTERVAL,
                recenter_interval=s.MC_RECENTER_INTERVAL,
                audit_interval=s.MC_AUDIT_INTERVAL,
            )
        except ValueError as e:
            raise ValidationError(
                "Invalid Monte-Carlo configuration",
                details={"errors": str(e)},
                original_exception=e
            )

    @staticmethod
    def load_initial_values(path: str) -> List[float]:
        """Eigenvalues of a checkpoint file for explicit initialisation."""
        values, metadata = read_checkpoint(path)
        logger.info(
            format_structured_log(
                "Loaded checkpoint", {"path": path, "n": int(values.size), "metadata": metadata}
            )
        )
        return values.tolist()

    @log_function_call(logger)
    def run(self, config: McConfig, checkpoint_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Run one chain and build its histogram.

        Args:
            config: Chain configuration
            checkpoint_path: Where to write the final eigenvalues (optional)

        Returns:
            Dictionary with the trace, the histogram and summary statistics
        """
        trace: McTrace = run_chain(config)
        histogram = empirical_density(
            trace.snapshots, canonical=config.model is GeometryModel.PLUS
        )

        if checkpoint_path:
            write_checkpoint(
                checkpoint_path,
                trace.final_values,
                {
                    "model": config.model.value,
                    "g": config.g,
                    "sweeps": config.sweeps,
                    "seed": config.seed,
                    "final_width": trace.final_width,
                },
            )

        summary = {
            "model": config.model.value,
            "g": config.g,
            "n": config.n,
            "sweeps": config.sweeps,
            "burnin": config.burnin,
            "seed": config.seed,
            "init": config.init.value,
            "positive_trace": config.positive_trace,
            "acceptance_rate": trace.acceptance_rate,
            "final_width": trace.final_width,
            "mean_energy": trace.mean_energy,
            "energy_stderr": trace.energy_stderr,
            "mean_m2": float(np.mean(trace.m2)),
            "m2_stderr": trace.m2_stderr,
            "mean_order_parameter": float(np.mean(trace.order_parameter)),
            "mean_abs_order_parameter": float(np.mean(np.abs(trace.order_parameter))),
            "max_audit_drift": trace.max_audit_drift,
            "histogram_mirrored": histogram.mirrored,
            "samples": int(trace.sweeps.size),
        }
        return {
            "status": RunStatus.COMPLETED.value,
            "trace": trace,
            "histogram": histogram,
            "summary": summary,
        }
