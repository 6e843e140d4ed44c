"""HTTP service wrapping the core package: pydantic models, handlers, app."""

from . import handlers, models

__all__ = ["handlers", "models"]
