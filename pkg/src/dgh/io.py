"""JSON file formats for digraphs, maps, and covers."""

from __future__ import annotations

import json
from pathlib import Path

from .digraph import Digraph, DigraphMap
from .errors import InputError


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def load_digraph(path):
    """{"vertices": ["a", ...], "arrows": [["a","b"], ...]}"""
    data = _load_json(path)
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError(f"{path}: expected an object with a 'vertices' list")
    arrows = data.get("arrows", [])
    if not all(isinstance(a, list) and len(a) == 2 for a in arrows):
        raise InputError(f"{path}: arrows must be two-element lists")
    return Digraph(data["vertices"], (tuple(a) for a in arrows))


def digraph_to_dict(g):
    return {
        "vertices": list(g.vertices),
        "arrows": [list(a) for a in g.sorted_arrows()],
    }


def save_digraph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(digraph_to_dict(g), fh, sort_keys=True)
        fh.write("\n")


def load_map(path):
    """{"source": "<path>", "target": "<path>", "assignment": {"a": "x", ...}}

    Source/target paths are resolved relative to the map file's directory.
    """
    data = _load_json(path)
    for key in ("source", "target", "assignment"):
        if key not in data:
            raise InputError(f"{path}: missing '{key}'")
    base = Path(path).parent
    source = load_digraph(base / data["source"])
    target = load_digraph(base / data["target"])
    return DigraphMap(source, target, data["assignment"])


def load_cover(path):
    """{"members": {"name": ["v1", "v2", ...], ...}}"""
    data = _load_json(path)
    members = data.get("members")
    if not isinstance(members, dict) or not members:
        raise InputError(f"{path}: expected a non-empty 'members' object")
    return {name: tuple(verts) for name, verts in members.items()}


def load_assignment(path):
    """{"assignment": {"a": "x", ...}} — an endomap given by assignment only."""
    data = _load_json(path)
    if "assignment" not in data:
        raise InputError(f"{path}: missing 'assignment'")
    return dict(data["assignment"])
