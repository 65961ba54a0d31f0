from .config import get_settings, validate_settings, Settings

__all__ = ["get_settings", "validate_settings", "Settings"]
