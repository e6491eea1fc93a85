"""HTTP layer: a FastAPI app exposing every verification as an endpoint."""
from .app import app

__all__ = ["app"]
