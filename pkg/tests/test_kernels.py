import pytest

from kronkit._kernels import available_implementations

from conftest import build

CASES = [
    ("symmetric", (4,), 2),
    ("generalized_quaternion", (4,), 3),
    ("cyclic", (7,), 2),
    ("alternating", (4,), 2),
]


def _roots(impl, G, d):
    mul_flat = [v for row in G.mul for v in row]
    gens = list(G.generating_set()) or [0]
    return impl.conjugation_orbit_roots(mul_flat, list(G.inv), gens, G.order, d)


def test_both_implementations_present():
    impls = available_implementations()
    assert "pure" in impls
    if "compiled" not in impls:
        pytest.skip("compiled kernel not built")


@pytest.mark.parametrize("fam,params,d", CASES)
def test_compiled_matches_pure(fam, params, d):
    impls = available_implementations()
    if "compiled" not in impls:
        pytest.skip("compiled kernel not built")
    G = build(fam, *params)
    assert list(_roots(impls["pure"], G, d)) == list(_roots(impls["compiled"], G, d))


def test_roots_are_canonical():
    impls = available_implementations()
    G = build("symmetric", 3)
    for impl in impls.values():
        root = _roots(impl, G, 2)
        # every root is the minimum of its orbit
        for t, r in enumerate(root):
            assert root[r] == r and r <= t
