"""
Settings loader for MONOCLE
Reads config/settings.yaml and applies environment overrides
"""

import logging
import os
from typing import Any, Dict, Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

SETTINGS_PATH = os.path.join(os.path.dirname(__file__), '..', 'config', 'settings.yaml')


class OracleSettings(BaseModel):
    max_n: int = Field(16, ge=2)
    max_component: int = Field(24, ge=2)
    exact_objective_max_n: int = Field(12, ge=2)


class SearchSettings(BaseModel):
    initial_temperature: float = Field(1.0, gt=0)
    cooling: float = Field(0.999, gt=0, lt=1)
    min_temperature: float = Field(1e-3, gt=0)
    progress: bool = False


class ExtractorSettings(BaseModel):
    thm21k_threshold: Literal["theorem", "remark"] = "theorem"


class LoggingSettings(BaseModel):
    level: str = "WARNING"
    format: str = "%(asctime)s - %(levelname)s - %(message)s"


class Settings(BaseModel):
    oracle: OracleSettings = OracleSettings()
    search: SearchSettings = SearchSettings()
    extractors: ExtractorSettings = ExtractorSettings()
    logging: LoggingSettings = LoggingSettings()


def load_settings_file(path: str = SETTINGS_PATH) -> Dict[str, Any]:
    """Load the raw settings mapping from YAML; empty on failure"""
    try:
        with open(path, 'r') as file:
            return yaml.safe_load(file) or {}
    except Exception as e:
        logging.error(f"Error loading settings: {e}")
        return {}


def load_settings(path: str = SETTINGS_PATH) -> Settings:
    """
    Build validated settings from YAML plus environment overrides.

    Recognised variables (also read from a .env file):
        MONOCLE_ORACLE_MAX_N: default vertex limit for exhaustive oracle runs
        MONOCLE_MAX_COMPONENT: component limit in colour-restricted mode
        MONOCLE_LOG_LEVEL: logging level name
    """
    load_dotenv()
    raw = load_settings_file(path)
    raw.pop("app", None)
    settings = Settings.model_validate(raw)

    if os.getenv("MONOCLE_ORACLE_MAX_N"):
        settings.oracle.max_n = int(os.environ["MONOCLE_ORACLE_MAX_N"])
    if os.getenv("MONOCLE_MAX_COMPONENT"):
        settings.oracle.max_component = int(os.environ["MONOCLE_MAX_COMPONENT"])
    if os.getenv("MONOCLE_LOG_LEVEL"):
        settings.logging.level = os.environ["MONOCLE_LOG_LEVEL"].upper()
    return settings


def setup_logging(settings: Settings) -> None:
    """Setup logging configuration"""
    logging.basicConfig(
        level=getattr(logging, settings.logging.level.upper(), logging.WARNING),
        format=settings.logging.format
    )
