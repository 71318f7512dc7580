# Copyright 2026 The pncc-features Authors. All Rights Reserved.
# Licensed under the Apache License, Version 2.0.

import numpy as np
import pytest

import pncc


def test_feature_shapes():
    wave = pncc.synth_noise(1.0, seed=3)
    assert wave.shape == (16000,)
    for feature in pncc.feature_types():
        assert pncc.extract(wave, feature).shape == (98, 30)


def test_config_overrides():
    wave = pncc.synth_tone(1000.0, 0.5)
    out = pncc.extract(wave, "cpncc", config={"pipeline.apply_dct": False,
                                              "frontend.num_filters": 40})
    assert out.shape == (48, 40)
    assert np.all(np.isfinite(out))
    assert pncc.config_fingerprint({"pcen.alpha": 0.9}) != pncc.config_fingerprint()
    with pytest.raises(pncc.PnccError, match="unknown key"):
        pncc.extract(wave, "cpncc", config="pcen.nonsense = 1\n")


def test_wav_round_trip(tmp_path):
    wave = pncc.synth_tone(440.0, 0.25, amplitude=0.3)
    path = tmp_path / "tone.wav"
    pncc.write_wav(path, wave)
    loaded, rate = pncc.load_wav(path)
    assert rate == 16000
    np.testing.assert_allclose(loaded, wave, atol=1.0 / 32768)
    with pytest.raises(pncc.PnccError, match="NotFound"):
        pncc.load_wav(tmp_path / "missing.wav")


def test_filterbank_and_stages_compose_to_extract():
    wave = pncc.synth_noise(0.8, seed=5)
    energies = pncc.mel_energies(wave)
    weights, centers = pncc.mel_filterbank()
    assert weights.shape == (60, 257)
    assert np.all(np.diff(centers) > 0)
    for feature in ("pncc", "scpncc"):
        np.testing.assert_array_equal(pncc.apply_stages(energies, feature),
                                      pncc.extract(wave, feature))


def test_energy_norm_hand_values():
    out, mu = pncc.mean_power_normalize(np.array([[1.0, 1.0], [3.0, 3.0]]),
                                        lambda_mu=0.5)
    np.testing.assert_allclose(mu, [1.0, 2.0], atol=1e-12)
    np.testing.assert_allclose(out, [[1.0, 1.0], [1.5, 1.5]], atol=1e-12)
    assert np.all(pncc.pcen(np.zeros((5, 3))) == 0.0)
    assert pncc.power_law(np.array([[2.0 ** 15]]))[0, 0] == pytest.approx(2.0)


def test_dct_orthonormal():
    x = np.random.default_rng(0).random((4, 60))
    c = pncc.dct_ii(x, 60)
    np.testing.assert_allclose((c ** 2).sum(axis=1), (x ** 2).sum(axis=1), rtol=1e-12)
    np.testing.assert_allclose(pncc.dct_ii(np.full((1, 60), 2.0), 3),
                               [[2.0 * np.sqrt(60.0), 0.0, 0.0]], atol=1e-12)


def test_metrics():
    labels = [True, False, True, False]
    scores = [4.0, 3.0, 2.0, 1.0]
    assert pncc.eer(labels, scores) == pytest.approx(0.5)
    assert pncc.eer([True, False], [1.0, 0.0]) == 0.0
    assert pncc.min_dcf([True, False, True], [0.5, 0.5, 0.5]) == pytest.approx(1.0)
    th, p_miss, p_fa = pncc.det_curve(labels, scores)
    assert th[0] == -np.inf and th[-1] == np.inf
    assert p_miss[0] == 0.0 and p_fa[-1] == 0.0
    with pytest.raises(pncc.PnccError, match="MissingClass"):
        pncc.eer([True, True], [1.0, 2.0])
