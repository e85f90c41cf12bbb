"""
Flat key-value configuration for campaigns.
Merges defaults, IRSSIM_ environment variables, a config file and CLI flags.
"""

import io
import logging
import os
from typing import Any, Dict, Mapping, Optional

from dotenv.parser import parse_stream
from pydantic import ValidationError

from simulator.errors import ConfigError
from simulator.settings.system_config import CampaignConfig, DeploymentConfig, SystemParams

# Configure logging
logger = logging.getLogger(__name__)

ENV_PREFIX = "IRSSIM_"

PARAM_KEYS = frozenset(SystemParams.__fields__)
DEPLOYMENT_KEYS = frozenset(DeploymentConfig.__fields__)
CAMPAIGN_KEYS = frozenset(CampaignConfig.__fields__) - {"params", "deployment"}
ALL_KEYS = PARAM_KEYS | DEPLOYMENT_KEYS | CAMPAIGN_KEYS


def parse_bindings(text: str) -> Dict[str, Any]:
    """
    Parse ``key = value`` lines, keeping each key's line number.

    Args:
        text: Config document

    Returns:
        Mapping of key to (value, line)
    """
    bindings = {}
    for binding in parse_stream(io.StringIO(text)):
        # The parser starts a binding at the blank lines preceding it
        string = binding.original.string
        line = binding.original.line + string[: len(string) - len(string.lstrip())].count("\n")
        if binding.error:
            raise ConfigError(f"Malformed line {binding.original.string.strip()!r}", line=line)
        if binding.key is None:
            continue
        key = binding.key.strip().lower()
        if key not in ALL_KEYS:
            raise ConfigError(f"Unknown configuration key '{binding.key}'", key=binding.key, line=line)
        if binding.value is None:
            raise ConfigError(f"Key '{key}' has no value", key=key, line=line)
        bindings[key] = (binding.value, line)
    return bindings


def env_bindings(environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Bindings taken from IRSSIM_-prefixed environment variables."""
    environ = os.environ if environ is None else environ
    bindings = {}
    for name, value in environ.items():
        if not name.startswith(ENV_PREFIX):
            continue
        key = name[len(ENV_PREFIX):].lower()
        if key not in ALL_KEYS:
            logger.warning(f"Ignoring unknown environment setting {name}")
            continue
        bindings[key] = (value, None)
    return bindings


def build_config(bindings: Mapping[str, Any]) -> CampaignConfig:
    """
    Validate flat bindings into a CampaignConfig.

    Args:
        bindings: Mapping of key to (value, line); line may be None

    Returns:
        CampaignConfig
    """
    sections: Dict[str, Dict[str, Any]] = {"params": {}, "deployment": {}, "campaign": {}}
    for key, (value, _) in bindings.items():
        if key in PARAM_KEYS:
            sections["params"][key] = value
        elif key in DEPLOYMENT_KEYS:
            sections["deployment"][key] = value
        else:
            sections["campaign"][key] = value

    try:
        return CampaignConfig(
            params=SystemParams(**sections["params"]),
            deployment=DeploymentConfig(**sections["deployment"]),
            **sections["campaign"],
        )
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else None
        line = bindings[key][1] if key in bindings else None
        raise ConfigError(f"Invalid value for '{key}': {error['msg']}", key=key, line=line) from e


def parse_config(text: str) -> CampaignConfig:
    """
    Parse a flat config document; unspecified keys keep their defaults.

    Args:
        text: Config document

    Returns:
        CampaignConfig
    """
    return build_config(parse_bindings(text))


def load_config(
    config_file: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
    defaults: Optional[Mapping[str, Any]] = None,
) -> CampaignConfig:
    """
    Layer defaults, environment, config file and explicit overrides.

    Args:
        config_file: Path of a flat config document
        overrides: Values from command-line flags (None entries are skipped)
        environ: Environment mapping (defaults to os.environ)
        defaults: Values replacing the built-in defaults

    Returns:
        CampaignConfig
    """
    bindings = {key: (value, None) for key, value in (defaults or {}).items()}
    bindings.update(env_bindings(environ))
    if config_file:
        try:
            with open(config_file, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise ConfigError(f"Cannot read configuration file {config_file}: {e}") from e
        bindings.update(parse_bindings(text))
    for key, value in (overrides or {}).items():
        if value is not None:
            bindings[key] = (value, None)
    config = build_config(bindings)
    logger.debug(f"Loaded configuration: {config}")
    return config
