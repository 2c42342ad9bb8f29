"""Intrinsic linking of graph embeddings in the sphere."""

from __future__ import annotations

__version__ = "0.1.0"
