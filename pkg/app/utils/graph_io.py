from __future__ import annotations
import json
import logging
from typing import Dict, Optional, Tuple

from ..algebra.errors import ValidationError
from ..algebra.graphs import DEFAULT_MAX_VERTICES, FamilySpec, Graph, build_family, graph_from_json

logger = logging.getLogger(__name__)


def load_graph_file(path: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Read a graph JSON file ({"n": .., "edges": [[i, j], ...]})."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ValidationError(f"cannot read graph file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path} is not valid JSON: {e}") from e
    g = graph_from_json(data, max_vertices)
    logger.debug("loaded %s from %s", g, path)
    return g


def family_from_options(kind: Optional[str], n=None, r=None, s=None, t=None) -> Optional[FamilySpec]:
    if not kind:
        return None
    return FamilySpec(kind, n, r, s, t).validate()


def resolve_input(
    graph_path: Optional[str] = None,
    graph_data: Optional[Dict] = None,
    family: Optional[FamilySpec] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Tuple[Graph, Optional[FamilySpec]]:
    """Exactly one of a graph file, inline graph JSON or a family spec."""
    given = [x is not None for x in (graph_path, graph_data, family)]
    if sum(given) != 1:
        raise ValidationError("give exactly one of a graph file, inline graph or a family")
    if graph_path is not None:
        return load_graph_file(graph_path, max_vertices), None
    if graph_data is not None:
        return graph_from_json(graph_data, max_vertices), None
    return build_family(family, max_vertices), family


def family_from_payload(payload: Dict) -> Optional[FamilySpec]:
    kind = payload.get("family")
    if not kind:
        return None
    try:
        params = {k: (int(payload[k]) if payload.get(k) is not None else None) for k in ("n", "r", "s", "t")}
    except (TypeError, ValueError) as e:
        raise ValidationError(f"family parameters must be integers: {e}") from e
    return family_from_options(kind, **params)
