"""Plain-text edge lists: the reader used for real networks and the writer for generated graphs.

Format: one edge per line, the first two tokens (split on whitespace or
commas) are endpoint labels, further tokens are ignored.  Blank lines and
lines starting with ``#`` or ``%`` are comments.  A comment of the form
``# nodes: N`` declares the total node count, which preserves isolated nodes.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Optional

from rggdim.errors import InvalidInputError, ParseError
from rggdim.graph import AdjacencyMatrix, from_edge_pairs

log = logging.getLogger(__name__)

_SPLIT = re.compile(r"[\s,]+")
_NODES_DECL = re.compile(r"^[#%]\s*nodes\s*[:=]\s*(\d+)\s*$")


class EncodingError(ParseError):
    pass


@dataclass
class EdgeListDocument:
    node_labels: list[str] = field(default_factory=list)
    edges: list[tuple[str, str]] = field(default_factory=list)
    skipped_self_loops: int = 0
    deduplicated: int = 0
    declared_nodes: Optional[int] = None
    extra_columns: bool = False

    @property
    def n(self) -> int:
        return len(self.node_labels)

    def index_pairs(self) -> list[tuple[int, int]]:
        index = {label: i for i, label in enumerate(self.node_labels)}
        return [(index[a], index[b]) for a, b in self.edges]

    def to_adjacency(self, nodes: Optional[int] = None) -> AdjacencyMatrix:
        """Adjacency over the observed labels, padded with isolated nodes up to ``nodes``.

        Without an explicit count the ``# nodes:`` declaration is used, if present.
        """
        total = nodes if nodes is not None else self.declared_nodes
        if total is None:
            total = self.n
        if total < self.n:
            raise InvalidInputError(f"node count {total} is smaller than the {self.n} labels observed")
        return from_edge_pairs(total, self.index_pairs())


def parse_edge_list(data) -> EdgeListDocument:
    if isinstance(data, (bytes, bytearray)):
        try:
            text = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"input is not valid UTF-8 (byte offset {exc.start})") from None
    else:
        text = data

    doc = EdgeListDocument()
    index: dict[str, int] = {}
    seen: set[tuple[int, int]] = set()

    def node(label):
        if label not in index:
            index[label] = len(doc.node_labels)
            doc.node_labels.append(label)
        return index[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line[0] in "#%":
            decl = _NODES_DECL.match(line)
            if decl:
                doc.declared_nodes = int(decl.group(1))
            continue
        tokens = [t for t in _SPLIT.split(line) if t]
        if len(tokens) == 1:
            raise ParseError(f"line {lineno}: expected two endpoint labels, found one", line_number=lineno)
        if len(tokens) > 2 and not doc.extra_columns:
            doc.extra_columns = True
            log.warning("line %d: ignoring columns after the first two (edge weights are discarded)", lineno)
        a, b = tokens[0], tokens[1]
        i, j = node(a), node(b)
        if i == j:
            doc.skipped_self_loops += 1
            continue
        key = (min(i, j), max(i, j))
        if key in seen:
            doc.deduplicated += 1
            continue
        seen.add(key)
        doc.edges.append((a, b))
    return doc


def format_edge_list(A: AdjacencyMatrix, header: Optional[list[str]] = None) -> str:
    """Serialise as ``i j`` lines (0-indexed, ``i < j``, ascending) after ``#`` header lines."""
    lines = [f"# {h}" for h in (header or [])]
    lines.append(f"# nodes: {A.n}")
    lines.extend(f"{i} {j}" for i, j in A.edges())
    return "\n".join(lines) + "\n"
