"""Domino substitution tilings and their marked tile sets."""

import json

from ._domtile import *  # noqa: F401,F403
from ._domtile import DominoPatch, TileSet


def patch_dict(p: DominoPatch) -> dict:
    return json.loads(p.to_json())


def tileset_dict(t: TileSet) -> dict:
    return json.loads(t.to_json())
