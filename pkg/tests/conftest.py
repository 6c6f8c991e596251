import pytest

from polarium.catalog import build_space
from polarium.props import full_report

_spaces = {}
_reports = {}


@pytest.fixture(scope="session")
def space_for():
    """Memoized catalog space builder (spaces are immutable and shareable)."""
    def get(name):
        if name not in _spaces:
            _spaces[name] = build_space(name)
        return _spaces[name]
    return get


@pytest.fixture(scope="session")
def report_for(space_for):
    def get(name):
        if name not in _reports:
            _reports[name] = full_report(space_for(name))
        return _reports[name]
    return get
