"""Certificates, failure reports and their line-oriented text form.

A certificate file looks like::

    MANIFEST
    command backbone
    ...
    VERTICES
    0
    1
    ...
    SIDE_A
    ...
    SIDE_B
    ...
    EDGES
    0 5
    ...
    KAPPA_VERIFIED
    4
    SEED
    7
    CONFIG
    k 3
    ...
    END

Every section is sorted so two files can be compared with ``diff``.  A
failure report replaces the graph sections with ``STAGE`` and ``WITNESS``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from .connectivity import is_k_connected
from .graph import Bipartition, Edge, Graph

TOOL_VERSION = "0.1.0"

CERTIFICATE_SECTIONS = ("MANIFEST", "VERTICES", "SIDE_A", "SIDE_B", "EDGES",
                        "KAPPA_VERIFIED", "SEED", "CONFIG")
FAILURE_SECTIONS = ("MANIFEST", "STAGE", "WITNESS", "SEED", "CONFIG")


@dataclass(frozen=True)
class Certificate:
    """A spanning bipartite subgraph H of the host with kappa(H) >= k."""

    subgraph: Graph
    bipartition: Bipartition
    verified_kappa: int
    rounds: int = 1


@dataclass(frozen=True)
class FailureReport:
    stage: str
    detail: Mapping[str, Any] = field(default_factory=dict)
    rounds: int = 0


@dataclass(frozen=True)
class RunManifest:
    command: str
    input_path: str
    seed: int
    config_overrides: tuple[tuple[str, str], ...] = ()
    tool_version: str = TOOL_VERSION

    def lines(self) -> list[str]:
        out = [f"command {self.command}", f"input_path {self.input_path}",
               f"seed {self.seed}", f"tool_version {self.tool_version}"]
        out += [f"override {k}={v}" for k, v in self.config_overrides]
        return out


def certificate_violation(host: Graph, h: Graph, p: Bipartition, k: int) -> str | None:
    """Name of the first certificate clause that fails, or None if all hold."""
    if h.vertices != host.vertices:
        return "NOT_SPANNING"
    for u, v in h.sorted_edges():
        if not host.has_edge(u, v):
            return "EDGE_NOT_IN_HOST"
    if p.ground != h.vertices:
        return "NOT_BIPARTITE"
    for u, v in h.sorted_edges():
        if not p.crosses(u, v):
            return "NOT_BIPARTITE"
    if not is_k_connected(h, k):
        return "KAPPA_BELOW_K"
    return None


def _value_lines(value: Any) -> list[str]:
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else list(value)
        return [" ".join(str(x) for x in item) if isinstance(item, tuple) else str(item)
                for item in items]
    return [str(value)]


def _config_lines(config: Mapping[str, Any]) -> list[str]:
    return [f"{key} {config[key]}" for key in sorted(config)]


def format_certificate(cert: Certificate, manifest: RunManifest,
                       config: Mapping[str, Any]) -> str:
    h = cert.subgraph
    lines = ["MANIFEST", *manifest.lines(), "VERTICES"]
    lines += [str(v) for v in h.vertex_list()]
    lines += ["SIDE_A", *(str(v) for v in sorted(cert.bipartition.side_a))]
    lines += ["SIDE_B", *(str(v) for v in sorted(cert.bipartition.side_b))]
    lines += ["EDGES", *(f"{u} {v}" for u, v in h.sorted_edges())]
    lines += ["KAPPA_VERIFIED", str(cert.verified_kappa)]
    lines += ["SEED", str(manifest.seed)]
    lines += ["CONFIG", *_config_lines(config)]
    lines.append("END")
    return "\n".join(lines) + "\n"


def format_failure(report: FailureReport, manifest: RunManifest,
                   config: Mapping[str, Any]) -> str:
    lines = ["MANIFEST", *manifest.lines(), "STAGE", report.stage, "WITNESS"]
    for key in sorted(report.detail):
        vals = _value_lines(report.detail[key])
        lines.append(f"{key} {' | '.join(vals)}" if vals else f"{key}")
    lines += ["SEED", str(manifest.seed), "CONFIG", *_config_lines(config), "END"]
    return "\n".join(lines) + "\n"


def parse_sections(text: str) -> dict[str, list[str]]:
    known = set(CERTIFICATE_SECTIONS) | set(FAILURE_SECTIONS)
    sections: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line == "END":
            break
        if line in known:
            current = line
            sections[current] = []
        elif current is None:
            raise ValueError(f"content before the first section: {line!r}")
        else:
            sections[current].append(line)
    return sections


@dataclass(frozen=True)
class ParsedCertificate:
    subgraph: Graph
    bipartition: Bipartition
    kappa_claimed: int
    config: dict[str, str]


def parse_certificate(text: str) -> ParsedCertificate:
    """Read back a certificate; raises ValueError for failure reports or malformed input."""
    sec = parse_sections(text)
    if "STAGE" in sec:
        raise ValueError("file is a failure report, not a certificate")
    for name in ("VERTICES", "SIDE_A", "SIDE_B", "EDGES", "KAPPA_VERIFIED"):
        if name not in sec:
            raise ValueError(f"missing section {name}")
    try:
        vertices = [int(x) for x in sec["VERTICES"]]
        side_a = frozenset(int(x) for x in sec["SIDE_A"])
        side_b = frozenset(int(x) for x in sec["SIDE_B"])
        edges: list[Edge] = []
        for line in sec["EDGES"]:
            u, v = line.split()
            edges.append((int(u), int(v)))
        kappa = int(sec["KAPPA_VERIFIED"][0])
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from None
    config = {}
    for line in sec.get("CONFIG", []):
        key, _, value = line.partition(" ")
        config[key] = value
    return ParsedCertificate(Graph(vertices, edges), Bipartition(side_a, side_b), kappa, config)
