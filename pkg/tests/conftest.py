from __future__ import annotations

import random

import pytest

from alliance_lab.graph import build_family, parse_family

from oracles import random_connected

_ACCEPTANCE: list[str] = []

CORPUS_FAMILIES = [
    "P2", "P3", "P4", "P5", "P7", "C3", "C4", "C5", "C6", "C8", "K2", "K3", "K4", "K5",
    "S1", "S3", "S5", "Q2", "Q3", "Q4",
    "P2xP2", "P2xP3", "P3xP3", "P3xP4", "P4xP4", "P2xP7", "P3xP5",
    "C3xC3", "C3xC4", "C4xC4", "C3xC5", "K3xP2", "K3xP4", "K3xC3", "K3xC4",
    "K2xK3", "K3xK3", "K2xK4", "K3xK5", "K4xK4", "P2xC4", "P3xC3", "P3xC5",
    "S2xP4", "S3xS3", "S2xC5", "K2xC7",
]


def corpus() -> list:
    """Graphs with at most 16 vertices: named families, products and random ones."""
    graphs = [(name, build_family(parse_family(name))) for name in CORPUS_FAMILIES]
    rng = random.Random(20240611)
    for i in range(20):
        n = rng.randint(4, 12)
        graphs.append((f"random-{i}", random_connected(rng, n, rng.choice([0.15, 0.3, 0.5]))))
    return graphs


@pytest.fixture
def acceptance_log():
    def record(criterion: int, ok: bool, detail: str) -> None:
        line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
