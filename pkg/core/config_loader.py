# Copyright 2024 Schreier Lab Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Experiment Configuration Support

Loads YAML or JSON experiment files into the pydantic config models.

An experiment file has one top-level block named after the experiment kind
and an optional ``variable`` block whose entries can be referenced as
``${var.name}`` and overridden from the command line:

    variable:
      seed: {default: 7}
    tower:
      seed: ${var.seed}
      levels: 3
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from core.errors import ConfigError
from core.models.config import (
    ChainConfig,
    CoverConfig,
    DistortionConfig,
    FriedmanSweepConfig,
    TowerConfig,
)

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

EXPERIMENT_MODELS: Dict[str, Type[BaseModel]] = {
    "tower": TowerConfig,
    "cover": CoverConfig,
    "friedman_sweep": FriedmanSweepConfig,
    "distortion": DistortionConfig,
    "chain": ChainConfig,
}


class ConfigLoader:
    """
    Load and validate experiment configuration files.

    Parsed files are cached by path; variable substitution happens on a copy.
    """

    def __init__(self):
        self.config_cache: Dict[str, Dict[str, Any]] = {}

    def load_config(self, config_path: str) -> Dict[str, Any]:
        """
        Load a raw configuration mapping from file.

        Args:
            config_path: Path to config file (.yaml, .yml, or .json)

        Returns:
            Parsed configuration
        """
        path = Path(config_path)

        if not path.exists():
            raise ConfigError(f"config file not found: {config_path}")

        if config_path in self.config_cache:
            return self.config_cache[config_path]

        try:
            if path.suffix in [".yaml", ".yml"]:
                config = self._load_yaml(path)
            elif path.suffix == ".json":
                config = self._load_json(path)
            else:
                raise ConfigError(f"unsupported config format: {path.suffix}")
        except (yaml.YAMLError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot parse {config_path}: {e}") from None

        self._validate_config(config)
        self.config_cache[config_path] = config

        logger.info(f"Loaded config from {config_path}")
        return config

    def _load_yaml(self, path: Path) -> Any:
        with open(path, "r") as f:
            return yaml.safe_load(f)

    def _load_json(self, path: Path) -> Any:
        with open(path, "r") as f:
            return json.load(f)

    def _validate_config(self, config: Any):
        if not isinstance(config, dict):
            raise ConfigError("config must be a mapping")

        if "variable" in config and not isinstance(config["variable"], dict):
            raise ConfigError("variable block must be a mapping")

        kinds = [key for key in config if key != "variable"]
        unknown = [key for key in kinds if key not in EXPERIMENT_MODELS]
        if unknown:
            raise ConfigError(f"unknown experiment block(s): {', '.join(sorted(unknown))}")
        if len(kinds) != 1:
            raise ConfigError("config must contain exactly one experiment block")

    def experiment_kind(self, config: Dict[str, Any]) -> str:
        return next(key for key in config if key != "variable")

    def apply_variables(
        self,
        config: Dict[str, Any],
        var_values: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        """
        Resolve ``${var.name}`` references.

        A value that is exactly one reference keeps the variable's type;
        references embedded in longer strings are substituted as text.

        Args:
            config: Configuration with variables
            var_values: Values overriding the declared defaults

        Returns:
            Configuration without the variable block
        """
        var_values = var_values or {}
        var_defs = config.get("variable", {})

        resolved: Dict[str, Any] = {}
        for name, definition in var_defs.items():
            if name in var_values:
                resolved[name] = var_values[name]
            elif isinstance(definition, dict) and "default" in definition:
                resolved[name] = definition["default"]
            else:
                raise ConfigError(f"variable '{name}' has no value and no default")

        undeclared = set(var_values) - set(var_defs)
        if undeclared:
            raise ConfigError(f"undeclared variable(s): {', '.join(sorted(undeclared))}")

        def substitute(value: Any) -> Any:
            if isinstance(value, str):
                for name, var_value in resolved.items():
                    placeholder = f"${{var.{name}}}"
                    if value == placeholder:
                        return var_value
                    if placeholder in value:
                        value = value.replace(placeholder, str(var_value))
                if "${var." in value:
                    raise ConfigError(f"unresolved variable reference in {value!r}")
                return value
            if isinstance(value, dict):
                return {k: substitute(v) for k, v in value.items()}
            if isinstance(value, list):
                return [substitute(item) for item in value]
            return value

        return {k: substitute(v) for k, v in config.items() if k != "variable"}

    def load_experiment(
        self,
        config_path: str,
        var_values: Optional[Dict[str, Any]] = None,
    ) -> BaseModel:
        """Load a file and validate its experiment block into the matching model."""
        config = self.load_config(config_path)
        kind = self.experiment_kind(config)
        resolved = self.apply_variables(config, var_values)
        return self.validate_block(EXPERIMENT_MODELS[kind], resolved[kind])

    def resolve(
        self,
        kind: str,
        config_path: Optional[str] = None,
        var_values: Optional[Dict[str, Any]] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> BaseModel:
        """
        Build the model of one experiment kind from an optional file and
        command-line overrides; overrides set to None are ignored.
        """
        block: Dict[str, Any] = {}
        if config_path:
            config = self.load_config(config_path)
            found = self.experiment_kind(config)
            if found != kind:
                raise ConfigError(f"expected a '{kind}' block, found '{found}'")
            resolved = self.apply_variables(config, var_values)[kind] or {}
            if not isinstance(resolved, dict):
                raise ConfigError("experiment block must be a mapping")
            block = dict(resolved)
        block.update({key: value for key, value in (overrides or {}).items() if value is not None})
        return self.validate_block(EXPERIMENT_MODELS[kind], block)

    def validate_block(self, model: Type[ModelT], block: Any) -> ModelT:
        if not isinstance(block, dict):
            raise ConfigError("experiment block must be a mapping")
        try:
            return model(**block)
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()
            )
            raise ConfigError(problems) from None


def parse_var_overrides(pairs: Optional[list]) -> Dict[str, Any]:
    """Turn ``name=value`` strings into a mapping; values are parsed as YAML scalars."""
    overrides: Dict[str, Any] = {}
    for pair in pairs or []:
        name, sep, raw = pair.partition("=")
        if not sep or not name:
            raise ConfigError(f"expected name=value, got {pair!r}")
        overrides[name.strip()] = yaml.safe_load(raw)
    return overrides
