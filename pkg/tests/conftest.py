import itertools

import pytest

from cliquecurv import constructions as C

ER_PROBS = (0.2, 0.5, 0.8)


def er_corpus(count=200):
    """Seeded G(n, p) graphs with n <= 12 cycling through the three densities."""
    out = []
    for seed in range(count):
        n = 1 + seed % 12
        p = ER_PROBS[seed % 3]
        out.append((f"er:{n}:{p}:{seed}", C.erdos_renyi(n, p, seed)))
    return out


def generator_fixtures():
    """Every named generator at a desk-friendly size."""
    recipes = [
        "discrete:0", "discrete:1", "discrete:5", "complete:1", "complete:2", "complete:6",
        "cyclic:3", "cyclic:7", "wheel:3", "wheel:6", "wheel:9", "path:5",
        "tree:15:1", "tree:9:7", "hypercube:4",
        "platonic:tetrahedron", "platonic:cube", "platonic:octahedron",
        "platonic:dodecahedron", "platonic:icosahedron",
        "cross:3", "cross:4", "cross:5", "cross:6", "cross:7",
        "stellated-cube:3", "stellated-cube:4", "stellated-cube:5",
        "torus:4:5", "pyramid:cyclic:5", "bipyramid:platonic:icosahedron",
        "rect-hexeract", "600-cell",
    ]
    return [(s, C.from_recipe(s)) for s in recipes]


_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = er_corpus() + generator_fixtures()
    return _CORPUS


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()


def brute_force_fvector(g):
    """Clique counts by testing every vertex subset for completeness."""
    counts = []
    for size in range(1, g.n + 1):
        c = sum(
            1
            for sub in itertools.combinations(range(g.n), size)
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2))
        )
        if c == 0:
            break
        counts.append(c)
    return tuple(counts)


_ACCEPTANCE: dict[int, tuple[str, list[str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and rep.passed:
        return
    number, title = marker.args
    _, outcomes = _ACCEPTANCE.setdefault(number, (title, []))
    if rep.when == "call" or rep.failed:
        outcomes.append("PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcomes = _ACCEPTANCE[number]
        verdict = "PASS" if outcomes and all(o == "PASS" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title}")
