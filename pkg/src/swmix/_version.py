"""Single source of the package version string (keep in sync with pyproject.toml)."""

__version__ = "0.1.0"
