"""Shared test helpers: a build cache so suites can reuse field tables."""

from functools import lru_cache

from cyclosrg.finite_field import build_field


@lru_cache(maxsize=None)
def get_field(p: int, f: int):
    return build_field(p, f)
