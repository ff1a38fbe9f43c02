import random

import pytest

import zucaead._backend as backend_mod


@pytest.fixture
def rng():
    return random.Random(0x5EED)


@pytest.fixture(params=sorted(backend_mod.available_backends()))
def kernel_backend(request, monkeypatch):
    """Route the library through each available kernel backend in turn."""
    impl = backend_mod.available_backends()[request.param]
    monkeypatch.setattr(backend_mod, "ZucCore", impl.ZucCore)
    monkeypatch.setattr(backend_mod, "GhashCore", impl.GhashCore)
    monkeypatch.setattr(backend_mod, "xor_bytes", impl.xor_bytes)
    return request.param
