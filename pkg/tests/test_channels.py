import random

import pytest

from subrank import (ChannelSpec, DimTooLargeError, FoldedParams,
                     RankTooLargeError, SubspaceCodeParams, encode,
                     fg_encode, field_create, operator_channel,
                     rank_distance, rank_error_channel)


@pytest.fixture(scope="module")
def setup():
    field = field_create(2, 1, 6)
    params = SubspaceCodeParams.default(field, n=4, k=2, s=2)
    return field, params


def test_operator_channel_identity(setup, rng):
    _, params = setup
    V = encode(params, (9, 33))
    assert operator_channel(V, 0, 0, rng) == V


def test_operator_channel_dimension_accounting(setup):
    field, params = setup
    V = encode(params, (9, 33))
    rng = random.Random(2)
    for rho in (0, 1, 2):
        for t in (0, 1, 3):
            U = operator_channel(V, rho, t, rng)
            assert U.dim == params.n - rho + t
            assert U.intersect(V).dim == params.n - rho


def test_operator_channel_bounds(setup, rng):
    _, params = setup
    V = encode(params, (9, 33))
    with pytest.raises(DimTooLargeError):
        operator_channel(V, 5, 0, rng)
    with pytest.raises(DimTooLargeError):
        operator_channel(V, 0, params.ambient_dim - params.n + 1, rng)


def test_operator_channel_deterministic(setup):
    _, params = setup
    V = encode(params, (9, 33))
    a = operator_channel(V, 1, 2, random.Random(99))
    b = operator_channel(V, 1, 2, random.Random(99))
    assert a == b


def test_rank_channel_identity_and_exact_rank():
    params = FoldedParams.default(field_create(2, 1, 8), n=8, k=2, h=4, s=2)
    X = fg_encode(params, (3, 77))
    rng = random.Random(4)
    assert rank_error_channel(X, 0, rng) == X
    for t in (1, 2):
        for _ in range(10):
            Y = rank_error_channel(X, t, rng)
            assert rank_distance(X, Y) == t


def test_rank_channel_too_large():
    params = FoldedParams.default(field_create(2, 1, 8), n=8, k=2, h=4, s=2)
    X = fg_encode(params, (3, 77))
    with pytest.raises(RankTooLargeError):
        rank_error_channel(X, params.g + 1, random.Random(0))


def test_rank_channel_deterministic():
    params = FoldedParams.default(field_create(2, 1, 8), n=8, k=2, h=4, s=2)
    X = fg_encode(params, (3, 77))
    a = rank_error_channel(X, 2, random.Random(1))
    b = rank_error_channel(X, 2, random.Random(1))
    assert a == b


def test_channel_spec_json():
    spec = ChannelSpec("subspace", rho=1, t=2, seed=7)
    assert ChannelSpec.from_json(spec.to_json()) == spec
    with pytest.raises(ValueError):
        ChannelSpec("weird")
    with pytest.raises(ValueError):
        ChannelSpec("rank", t=-1)
