import numpy as np
import pytest

from lapbound.experiments import concentration_experiment
from lapbound.experiments.concentration import default_t_rule


def test_small_run():
    rep = concentration_experiment((100, 400), reps=20, t_rule=0.05, seed=1)
    assert rep.std[1] < rep.std[0]
    assert rep.fit is not None
    assert list(rep.t) == [0.05, 0.05]


def test_default_rule():
    assert default_t_rule(16, 1) == pytest.approx(0.5)
    rep = concentration_experiment((100, 200), reps=20, t_rule=default_t_rule, seed=0)
    assert np.allclose(rep.t, [100**-0.25, 200**-0.25])


def test_reproducible():
    a = concentration_experiment((100, 200), reps=20, seed=3)
    b = concentration_experiment((100, 200), reps=20, seed=3)
    assert np.array_equal(a.std, b.std)


@pytest.mark.parametrize("reps", [1, 19])
def test_reps_guard(reps):
    with pytest.raises(ValueError):
        concentration_experiment((100, 200), reps=reps)
