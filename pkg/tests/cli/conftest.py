import json

import pytest


@pytest.fixture
def write_job(tmp_path):
    def write(job, name="job.json"):
        path = tmp_path / name
        with path.open("w") as f:
            json.dump(job, f)
        return str(path)

    return write


@pytest.fixture(scope="module")
def simplex2_points():
    return [[0, 0], [1, 0], [0, 1]]
