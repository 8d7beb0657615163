import json
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from hopftrees.nsym import MultiSeq
from hopftrees.roctree import RocTree

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def trees(n=2, max_edges=5):
    """Random ROC trees via random nested forests."""
    colours = st.integers(1, n)
    forest = st.recursive(
        st.just(()),
        lambda kids: st.lists(st.tuples(colours, kids), max_size=3).map(tuple),
        max_leaves=max_edges,
    )
    return forest.map(lambda f: RocTree(tuple((c, _to_tree(s)) for c, s in f))) \
        .filter(lambda t: t.weight <= max_edges)


def _to_tree(forest):
    return RocTree(tuple((c, _to_tree(s)) for c, s in forest))


def multiseqs(n=2, max_rows=3, max_len=3):
    row = st.lists(st.integers(1, n), min_size=1, max_size=max_len)
    return st.lists(row, max_size=max_rows).map(MultiSeq)


@pytest.fixture
def golden():
    def load(name):
        return (GOLDEN / f"{name}.json").read_text()
    return load


def dump(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def record():
    """Store the outcome line for one acceptance criterion."""
    def put(criterion: str, passed: bool, detail: str = "") -> bool:
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE[criterion] = f"{status}  {criterion}" + (f"  ({detail})" if detail else "")
        print(ACCEPTANCE[criterion])
        return passed
    return put


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
