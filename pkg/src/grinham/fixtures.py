"""Bundled planar graphs with precomputed face bases."""

from __future__ import annotations

from importlib import resources

from .cyclespace import Cycle, parse_basis
from .graph import Graph, parse_graph


def _faces_dir():
    return resources.files("grinham") / "data" / "faces"


def face_fixture_names() -> list[str]:
    return sorted(p.name[: -len(".graph")] for p in _faces_dir().iterdir() if p.name.endswith(".graph"))


def load_face_fixture(name: str) -> tuple[Graph, list[Cycle]]:
    """The graph and its bounded faces (all faces but the one chosen as outer)."""
    root = _faces_dir()
    g = parse_graph((root / f"{name}.graph").read_text())
    faces = parse_basis((root / f"{name}.faces").read_text())
    return g, faces
