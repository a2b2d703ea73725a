import pytest

from greedyscs import kernels


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Run the test once per importable kernel backend."""
    with kernels.use_backend(request.param):
        yield request.param
