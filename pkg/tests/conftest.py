import os

import numpy as np
import pytest

from evirank import repro

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def grades():
    return repro.grade_frame()


@pytest.fixture(params=[1, 2, 3, 4])
def example(request):
    """(number, {"m1": ..., "m2": ..., "m3": ...}) for each grading example."""
    return request.param, repro.example_bbas(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20140301)


@pytest.fixture
def data_file():
    def _data_file(name):
        return os.path.join(DATA_DIR, name)

    return _data_file
