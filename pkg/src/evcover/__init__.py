"""Eternal vertex cover: exact game solver, structural bounds, and fast chordal evc."""

__version__ = "0.1.0"

from .cover import CoverResult, chordal_mvc, chordal_mvc_forced, is_chordal, mvc_exact, mvc_forced
from .decomposition import (
    BlockCutStructure,
    ComponentPiece,
    attach_extension,
    b_components,
    block_cut_structure,
    is_locally_connected,
    x_components,
)
from .game import ConfigClass, GuardConfig, OccupancyModel, defendable, enumerate_configs, evc_class, evc_exact, evc_forced
from .graph import Graph, GraphError, build_graph, connected_components, induced_subgraph
from .structural import (
    EvcReport,
    VerificationReport,
    evc_chordal,
    evc_class_F_formula,
    evc_locally_connected,
    evc_lower_bound,
    verify_certificate,
    verify_evc_cut_property,
    verify_lemma1,
    verify_lemma2,
    verify_observation1,
)

__all__ = [
    "BlockCutStructure",
    "ComponentPiece",
    "ConfigClass",
    "CoverResult",
    "EvcReport",
    "Graph",
    "GraphError",
    "GuardConfig",
    "OccupancyModel",
    "VerificationReport",
    "attach_extension",
    "b_components",
    "block_cut_structure",
    "build_graph",
    "chordal_mvc",
    "chordal_mvc_forced",
    "connected_components",
    "defendable",
    "enumerate_configs",
    "evc_chordal",
    "evc_class",
    "evc_class_F_formula",
    "evc_exact",
    "evc_forced",
    "evc_locally_connected",
    "evc_lower_bound",
    "induced_subgraph",
    "is_chordal",
    "is_locally_connected",
    "mvc_exact",
    "mvc_forced",
    "verify_certificate",
    "verify_evc_cut_property",
    "verify_lemma1",
    "verify_lemma2",
    "verify_observation1",
    "x_components",
]
