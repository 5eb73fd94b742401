"""
持久化模块导出
"""

from .store import ArtifactStore, STDIO

__all__ = ["ArtifactStore", "STDIO"]
