import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from catkit import models  # noqa: E402

CORPUS = os.path.join(os.path.dirname(os.path.dirname(__file__)), "corpus")


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture(scope="session")
def finset4():
    return models.skeletal_finset(4)


@pytest.fixture(scope="session")
def div12_spec():
    return models.LatticeSpec.divisors(12)


@pytest.fixture(scope="session")
def div12(div12_spec):
    return models.poset_category(div12_spec)


@pytest.fixture(scope="session")
def z2():
    return models.cyclic_group_category(2)


@pytest.fixture(scope="session")
def bool_smcc():
    return models.heyting_smcc(models.LatticeSpec.boolean(2))


@pytest.fixture(scope="session")
def z3_smcc():
    return models.group_smcc(3)


@pytest.fixture(scope="session")
def smcc_models(bool_smcc, z3_smcc):
    return [bool_smcc, z3_smcc]
