"""Data models for signatures, meshes, run configuration and reports."""
