"""Shared brute-force oracles, kept independent of the code paths they check."""

import pytest

from coxroots.roots import IDENTITY, RootSystem


def element_ball(rs: RootSystem, radius: int):
    """Elements grouped by length, found by right-multiplication BFS with
    normal-form deduplication (no automaton, no inversion sets)."""
    levels = [[IDENTITY]]
    seen = {IDENTITY}
    for _ in range(radius):
        nxt = []
        for x in levels[-1]:
            for s in range(rs.rank):
                y = rs.normalize(x.word + (s,))
                if len(y.word) == len(x.word) + 1 and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        nxt.sort(key=lambda e: e.word)
        levels.append(nxt)
    return levels


def is_prefix_oracle(rs: RootSystem, u, v) -> bool:
    """u is a prefix of v iff v = u * (u^-1 v) is length-additive."""
    quot = rs.multiply(rs.inverse(u), v)
    return len(quot.word) == len(v.word) - len(u.word)


@pytest.fixture(scope="session")
def atilde2():
    return RootSystem.preset("Atilde2")


@pytest.fixture(scope="session")
def gtilde2():
    return RootSystem.preset("Gtilde2")


@pytest.fixture(scope="session")
def dinf():
    return RootSystem.preset("Dinf")


@pytest.fixture(scope="session")
def universal3():
    return RootSystem.preset("universal:3")
