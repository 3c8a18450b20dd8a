"""file_processor.py - JSON, CSV and DOT input/output"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from loguru import logger

from config.settings import Settings
from graphs.coloring import Coloring
from graphs.models import Graph
from utils.exceptions import EDCNError, SizeMismatch

STDIO = "-"


class FileProcessor:
    """Reads and writes the CLI's files; "-" means the standard stream"""

    @staticmethod
    def read_text(path: str) -> str:
        if path == STDIO:
            return sys.stdin.read()
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            logger.error(f"Cannot read {path}: {e}")
            raise EDCNError(f"Cannot read {path}: {e.strerror}", path=path)

    @staticmethod
    def write_text(path: str, text: str):
        if path == STDIO:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            logger.error(f"Cannot write {path}: {e}")
            raise EDCNError(f"Cannot write {path}: {e.strerror}", path=path)
        logger.debug(f"Wrote {len(text)} bytes to {path}")

    # =============================================================================
    # JSON
    # =============================================================================

    @staticmethod
    def dumps(payload: Any) -> str:
        """Compact JSON, key order as built, one document per line"""
        return json.dumps(payload, separators=(",", ":")) + "\n"

    @staticmethod
    def read_json(path: str) -> Dict[str, Any]:
        text = FileProcessor.read_text(path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise EDCNError(f"Invalid JSON in {path}: {e.msg} at line {e.lineno}", path=path)

    @staticmethod
    def write_json(path: str, payload: Any):
        FileProcessor.write_text(path, FileProcessor.dumps(payload))

    @staticmethod
    def write_jsonl(path: str, payloads: List[Any]):
        FileProcessor.write_text(path, "".join(FileProcessor.dumps(p) for p in payloads))

    @staticmethod
    def load_graph(path: str) -> Graph:
        return Graph.from_dict(FileProcessor.read_json(path))

    @staticmethod
    def load_coloring(path: str) -> Coloring:
        return Coloring.from_dict(FileProcessor.read_json(path))

    # =============================================================================
    # CSV / DOT
    # =============================================================================

    @staticmethod
    def to_csv(frame: pd.DataFrame) -> str:
        return frame.to_csv(index=False, lineterminator="\n")

    @staticmethod
    def write_csv(path: str, frame: pd.DataFrame):
        FileProcessor.write_text(path, FileProcessor.to_csv(frame))

    @staticmethod
    def to_dot(g: Graph, coloring: Optional[Coloring] = None,
               palette: Optional[List[str]] = None) -> str:
        """Undirected DOT; a coloring fills each vertex by its colour class"""
        palette = palette or Settings.DOT_PALETTE
        if coloring is not None and coloring.n != g.n:
            raise SizeMismatch(expected=g.n, got=coloring.n)

        lines = ["graph G {"]
        for v in range(g.n):
            attrs = [f'label="{g.vertex_name(v)}"']
            if coloring is not None:
                c = coloring.colors[v]
                attrs[0] = f'label="{g.vertex_name(v)} c{c}"'
                attrs += ['style="filled"', f'fillcolor="{palette[(c - 1) % len(palette)]}"']
            lines.append(f'  "{v}" [{", ".join(attrs)}];')
        for u, v in g.edges():
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
