"""Shared randomized generators for the test suite."""

from __future__ import annotations

import random

import pytest

from fourshift.core import Config, DomainError, TupleK, validate_tuple


def rand_config(rng: random.Random, span: int = 8, max_cells: int = 5,
                nonzero: bool = True) -> Config:
    """A finite configuration with up to max_cells nonzero cells inside
    [-span, span]."""
    while True:
        cells = {rng.randrange(-span, span + 1): rng.randrange(1, 4)
                 for _ in range(rng.randrange(0 if not nonzero else 1,
                                              max_cells + 1))}
        if cells or not nonzero:
            return Config.from_cells(cells)


def rand_single_head(rng: random.Random, span: int = 8) -> Config:
    """A configuration with exactly one head and otherwise head-free cells."""
    q = rng.randrange(-span, span + 1)
    cells = {q: 3}
    for _ in range(rng.randrange(0, 5)):
        p = rng.randrange(-span, span + 1)
        if p != q:
            cells[p] = rng.randrange(1, 3)
    return Config.from_cells(cells)


def rand_tuple(rng: random.Random, k: int, span: int = 5,
               max_cells: int = 4) -> TupleK:
    """k nonzero configurations from pairwise distinct orbits."""
    while True:
        comps = tuple(rand_config(rng, span, max_cells) for _ in range(k))
        try:
            return validate_tuple(comps)
        except DomainError:
            continue


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260826)
