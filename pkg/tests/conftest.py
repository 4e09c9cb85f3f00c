import dataclasses

import numpy as np
import pytest

from fvscaling.laws import model_advection_reaction, model_burgers, model_traffic


@pytest.fixture
def advection():
    return model_advection_reaction()


@pytest.fixture
def source_free_advection():
    return model_advection_reaction(lambda_=1.0, r=0.0)


@pytest.fixture
def burgers():
    return model_burgers()


@pytest.fixture
def traffic():
    return model_traffic()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def with_initial_condition(model, func):
    return dataclasses.replace(model, initial_condition=func)


def without_source(model):
    return dataclasses.replace(model, source=lambda q: np.zeros_like(np.asarray(q, dtype=np.float64)))
