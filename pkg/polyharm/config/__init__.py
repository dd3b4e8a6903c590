"""Configuration management for polyharm."""

from polyharm.config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings"]
