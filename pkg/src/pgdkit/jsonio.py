"""JSON design format: {"v": int, "blocks": [[int, ...], ...]}.

Blocks must appear in canonical order (each block ascending, block list
sorted lexicographically); pass normalize=True to accept and re-sort
arbitrary input.
"""

from __future__ import annotations

import json

from .incidence import IncidenceStructure


class DesignFormatError(ValueError):
    pass


def design_to_dict(design: IncidenceStructure) -> dict:
    return {"v": design.v, "blocks": [list(block) for block in design.blocks]}


def design_to_json(design: IncidenceStructure, indent=None) -> str:
    return json.dumps(design_to_dict(design), indent=indent)


def design_from_dict(payload, normalize: bool = False) -> IncidenceStructure:
    if not isinstance(payload, dict):
        raise DesignFormatError("top-level value must be an object")
    if set(payload) != {"v", "blocks"}:
        raise DesignFormatError('expected exactly the keys "v" and "blocks"')
    v, blocks = payload["v"], payload["blocks"]
    if not isinstance(v, int) or isinstance(v, bool):
        raise DesignFormatError('"v" must be an integer')
    if not isinstance(blocks, list) or not all(
        isinstance(block, list)
        and all(isinstance(x, int) and not isinstance(x, bool) for x in block)
        for block in blocks
    ):
        raise DesignFormatError('"blocks" must be a list of integer lists')
    design = IncidenceStructure(v, blocks)
    if not normalize and list(design.blocks) != [tuple(b) for b in blocks]:
        raise DesignFormatError(
            "blocks are not in canonical order (rerun with --normalize)"
        )
    return design


def load_design(path, normalize: bool = False) -> IncidenceStructure:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DesignFormatError(
                f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
    try:
        return design_from_dict(payload, normalize=normalize)
    except ValueError as exc:
        raise DesignFormatError(f"{path}: {exc}") from exc


def save_design(design: IncidenceStructure, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(design_to_json(design, indent=1))
        handle.write("\n")


def parse_row_string(text: str):
    """Parse "v:c0,c1,..." into a CirculantRow."""
    from .spectra import CirculantRow

    try:
        head, tail = text.split(":", 1)
        v = int(head)
        c = [int(x) for x in tail.split(",")]
    except ValueError as exc:
        raise DesignFormatError(
            f"expected 'v:c0,c1,...' with integers, got {text!r}"
        ) from exc
    return CirculantRow(v, c)
