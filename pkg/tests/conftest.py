import pytest

import quantcut as qc


@pytest.fixture(scope="session")
def car_table():
    return qc.standardize(qc.load_csv(qc.bundled_dataset_path(), "model", "type"))


@pytest.fixture(scope="session")
def car_weights(car_table):
    return qc.build_weights(car_table)


@pytest.fixture(scope="session")
def car_qubo(car_weights):
    return qc.maxcut_to_qubo(car_weights)


@pytest.fixture(scope="session")
def car_ham(car_qubo):
    return qc.qubo_to_ising(car_qubo)
