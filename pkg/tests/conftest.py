"""Shared fixtures: cached group builds so expensive setups run once."""

from functools import lru_cache

import pytest

from axial.coxeter import CoxeterElement
from axial.rootdata import EuclideanType, build_root_system


@lru_cache(maxsize=None)
def root_system(letter: str, rank: int, bigon: tuple[int, int] | None = None):
    return build_root_system(EuclideanType(letter, rank, bigon))


@lru_cache(maxsize=None)
def coxeter(letter: str, rank: int, bigon: tuple[int, int] | None = None,
            window_mult: int = 2) -> CoxeterElement:
    return CoxeterElement(root_system(letter, rank, bigon), window_mult=window_mult)


@lru_cache(maxsize=None)
def w_interval(letter: str, rank: int, bigon: tuple[int, int] | None = None):
    from axial.winterval import build_w_interval

    return build_w_interval(coxeter(letter, rank, bigon))


@lru_cache(maxsize=None)
def cryst_data(letter: str, rank: int, bigon: tuple[int, int] | None = None):
    from axial.cryst import build_cryst_interval

    return build_cryst_interval(coxeter(letter, rank, bigon))


@lru_cache(maxsize=None)
def mid_interval(n: int):
    from axial.midnc import build_special_interval

    return build_special_interval(n)


@lru_cache(maxsize=None)
def garside_data(n: int):
    from axial.garside import GarsideData

    return GarsideData(mid_interval(n))


@pytest.fixture
def g2():
    return coxeter("G", 2)
