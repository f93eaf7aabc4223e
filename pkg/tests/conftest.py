"""Shared fixtures: loaded resources, the two sample datasets, and an
engine instance. Everything here is immutable or rebuilt per test."""

import pytest

from vaguequery import (
    Interpreter,
    default_dataset_path,
    load_dataset,
    load_resources,
)


@pytest.fixture(scope="session")
def resources():
    return load_resources()


@pytest.fixture(scope="session")
def earthquakes():
    return load_dataset(default_dataset_path("earthquakes").read_bytes(), "earthquakes")


@pytest.fixture(scope="session")
def nations():
    return load_dataset(default_dataset_path("nations").read_bytes(), "nations")


@pytest.fixture(scope="session")
def engine(resources):
    return Interpreter(resources)
