import random

import pytest

from discpf import kernels


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Each kernel module that is importable in this build."""
    return kernels.available_backends()[request.param]
