import pytest

from tools.benchmark import instance_shape, run_benchmark


def test_instance_shape():
    assert instance_shape(1000, 3, 0.25) == (250, 250)
    assert instance_shape(2, 3, 0.25) == (1, 0)


def test_report_layout():
    report = run_benchmark('proper', [20, 40], trials=1, progress=False)
    assert report['mode'] == 'proper'
    assert report['sizes'] == [20, 40]
    assert len(report['medians']) == 2
    assert len(report['growth']) == 1


@pytest.mark.slow
@pytest.mark.parametrize('mode, sizes', [
    ('proper', [1000, 2000, 4000]),
    ('unit', [200, 400, 800]),
])
def test_growth_stays_near_linear(mode, sizes):
    report = run_benchmark(mode, sizes, trials=5, k=3, shared_fraction=0.25, seed=0, progress=False)
    assert max(report['growth']) <= 3.0, report
