"""Both kernel backends against a direct reading of the definitions."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monocrystal import _purepy

try:
    from monocrystal import _speedups
except ImportError:  # extension not built
    _speedups = None

BACKENDS = [pytest.param(_purepy, id="python")]
BACKENDS.append(
    pytest.param(
        _speedups,
        id="compiled",
        marks=pytest.mark.skipif(_speedups is None, reason="extension not built"),
    )
)

RANK = 4

exps = st.dictionaries(
    st.tuples(st.integers(1, RANK), st.integers(-4, 4)),
    st.integers(-3, 3).filter(bool),
    max_size=10,
)


def canon(d):
    return tuple(sorted((i, s, e) for (i, s), e in d.items() if e))


def definition_stats(d, i):
    """phi, eps, n_f, n_e straight from the max-over-all-n definitions."""
    shifts = [s for (j, s) in d if j == i]
    lo, hi = (min(shifts) - 2, max(shifts) + 2) if shifts else (-1, 1)
    prefix = {n: sum(e for (j, s), e in d.items() if j == i and s <= n) for n in range(lo, hi + 1)}
    suffix = {n: -sum(e for (j, s), e in d.items() if j == i and s > n) for n in range(lo, hi + 1)}
    phi = max(prefix.values())
    eps = max(suffix.values())
    n_f = min(n for n, v in prefix.items() if v == phi) if phi else None
    n_e = max(n for n, v in prefix.items() if v == phi) if eps else None
    return phi, eps, n_f, n_e


@pytest.mark.parametrize("k", BACKENDS)
@given(exps)
@settings(max_examples=300)
def test_signatures_match_definition(k, d):
    sig = k.signatures(canon(d), RANK)
    for i in range(1, RANK + 1):
        assert sig[i - 1] == definition_stats(d, i)


@pytest.mark.parametrize("k", BACKENDS)
@given(exps, exps)
def test_merge_is_exponent_sum(k, a, b):
    total = dict(a)
    for key, e in b.items():
        total[key] = total.get(key, 0) + e
    assert k.merge(canon(a), canon(b)) == canon(total)


@pytest.mark.parametrize("k", BACKENDS)
@given(exps)
def test_epsilons_vanish(k, d):
    expected = all(definition_stats(d, i)[1] == 0 for i in range(1, RANK + 1))
    assert k.epsilons_vanish(canon(d)) is expected


@pytest.mark.parametrize("k", BACKENDS)
def test_shifted(k):
    template = ((1, 0, 1), (1, 1, 1), (2, 0, -1))
    assert k.shifted(template, 3, -1) == ((1, 3, -1), (1, 4, -1), (2, 3, 1))


@pytest.mark.skipif(_speedups is None, reason="extension not built")
@given(exps)
def test_backends_agree_on_neighbors(d):
    templates = tuple(
        tuple(sorted([(i, 0, 1), (i, 1, 1)] + [(j, 1 if j < i else 0, -1) for j in (i - 1, i + 1) if 1 <= j <= RANK]))
        for i in range(1, RANK + 1)
    )
    items = canon(d)
    assert _purepy.neighbors(items, RANK, templates) == _speedups.neighbors(items, RANK, templates)


def test_example_prefix_scan():
    # Y_1(1) Y_1(2)^-1: prefix sums 0, 1, 0 and suffix maximum 1
    assert _purepy.signatures(((1, 1, 1), (1, 2, -1)), 1) == [(1, 1, 1, 1)]
