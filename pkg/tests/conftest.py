"""
Shared fixtures
"""

from pathlib import Path

import pytest
from click.testing import CliRunner

from structures import catalog
from structures.lattice import two, boolean, chain3, m3, n5

SAMPLES = Path(__file__).resolve().parent.parent / 'samples'


@pytest.fixture
def samples():
    return SAMPLES


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def cat():
    return catalog


@pytest.fixture(params=['2', '2^2', 'chain3', 'M3', 'N5'])
def lattice(request):
    return {'2': two, '2^2': lambda: boolean(2), 'chain3': chain3, 'M3': m3, 'N5': n5}[request.param]()
