import os
from pathlib import Path

import numpy as np
import pytest

import gamsonnet

DATA = Path(os.environ.get("GAM_TEST_DATA_DIR", Path(__file__).resolve().parents[2] / "tests" / "data"))


def test_stem_and_normalize():
    assert gamsonnet.stem("corazones") == "corazon"
    toks = gamsonnet.normalize("El amor y la noche", mode="raw")
    assert [t[0] for t in toks] == ["amor", "noche"]
    assert [t[1] for t in toks] == [1, 2]


def test_statistics_match_numpy():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(40, 3))
    y = X @ np.array([1.0, -2.0, 0.5]) + 0.3 + rng.normal(size=40)
    fit = gamsonnet.ols(X, y)
    ref, *_ = np.linalg.lstsq(np.column_stack([np.ones(40), X]), y, rcond=None)
    assert fit["intercept"] == pytest.approx(ref[0])
    assert fit["coefficients"] == pytest.approx(ref[1:])
    assert gamsonnet.spearman([1, 2, 3, 4], [10, 20, 25, 40]) == pytest.approx(1.0)
    assert gamsonnet.spearman([1, 1, 1], [1, 2, 3]) is None
    a = gamsonnet.one_way_anova([[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]])
    assert a["f_statistic"] == pytest.approx(0.0)


def test_alpha_and_power():
    r = gamsonnet.krippendorff_alpha([[1, 1], [1, 2], [2, 2], [3, 3]], "nominal")
    assert r["alpha"] == pytest.approx(2 / 3)
    assert gamsonnet.krippendorff_alpha([[1, 1, None], [2, 2, 2]], "ordinal")["alpha"] == 1.0
    with pytest.raises(gamsonnet.ComputationError):
        gamsonnet.krippendorff_alpha([[1, None], [None, 2]])
    assert gamsonnet.min_sample_size(0.05, 0.8, 0.8) == 26


def test_run_pipeline(tmp_path):
    paths, decisions = gamsonnet.run("features", str(DATA / "run.conf"), str(tmp_path))
    assert [Path(p).name for p in paths] == ["gam_features.csv"]
    header = (tmp_path / "gam_features.csv").read_text().splitlines()[0].split(",")
    assert header == ["sonnet_id"] + gamsonnet.feature_names()
    assert len(gamsonnet.feature_names()) == 32
    with pytest.raises(gamsonnet.InputError):
        gamsonnet.run("stats", str(tmp_path / "missing.conf"))
