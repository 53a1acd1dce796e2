"""Configuration management for omlkit."""

# Local
from omlkit.config.constants import ElementKind, Operator, Relation, Subcommand
from omlkit.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings", "ElementKind", "Operator", "Relation", "Subcommand"]
