"""Taut ideal triangulations: layering, carried surfaces, and disc geometry."""
from .tri_core import (IdealTriangulation, TriangulationError, edge_classes, cusp_triangulations,
                       parse_document, parse_triangulation, serialize, validate)
from .taut import (Coorientation, TautError, check_full_taut, check_prop9, cusp_angle_profile,
                   dual_cycle, enumerate_taut)
from .surface_flip import (SurfaceIdealTri, apply_flip, canonical, flip_path_bfs,
                           punctured_surface, punctured_torus, ptorus_word_to_flips)
from .layering import LayeringError, MonodromySpec, build_mapping_torus, layer_word
from .carried import enumerate_solutions, euler_char, pairing, reconstruct, switch_system
from .discgeo import (build_model, check_prop12_suite, enumerate_admissible_discs, g_dot,
                      model_for)

__version__ = "0.1.0"

__all__ = [
    "IdealTriangulation", "TriangulationError", "edge_classes", "cusp_triangulations",
    "parse_document", "parse_triangulation", "serialize", "validate",
    "Coorientation", "TautError", "check_full_taut", "check_prop9", "cusp_angle_profile",
    "dual_cycle", "enumerate_taut",
    "SurfaceIdealTri", "apply_flip", "canonical", "flip_path_bfs", "punctured_surface",
    "punctured_torus", "ptorus_word_to_flips",
    "LayeringError", "MonodromySpec", "build_mapping_torus", "layer_word",
    "enumerate_solutions", "euler_char", "pairing", "reconstruct", "switch_system",
    "build_model", "check_prop12_suite", "enumerate_admissible_discs", "g_dot", "model_for",
    "corpus_files",
]


def corpus_files():
    """Bundled layered triangulations (words of length 2 to 4), sorted by name."""
    from importlib.resources import files

    data = files(__name__).joinpath("data")
    return sorted((p for p in data.iterdir() if p.name.endswith(".tri")), key=lambda p: p.name)
