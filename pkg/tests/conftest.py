from functools import lru_cache

from kronkit.chartab import character_table
from kronkit.zoo import FamilySpec, zoo_build


@lru_cache(maxsize=None)
def build(family, *params):
    return zoo_build(FamilySpec(family, tuple(params)))


@lru_cache(maxsize=None)
def table(family, *params):
    return character_table(build(family, *params))
