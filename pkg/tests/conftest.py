import pytest

from addbasis import CensusConfig, random_basis

# One corpus, generated once, shared by the property/trace/acceptance suites.
CORPUS_CONFIG = CensusConfig(trials=500, seed=20250816, modulus_max=360,
                             exceptional_max=8, residue_density=0.45,
                             window=(0, 120))


@pytest.fixture(scope="session")
def corpus():
    return [random_basis(CORPUS_CONFIG, trial)
            for trial in range(CORPUS_CONFIG.trials)]
