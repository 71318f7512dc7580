# Copyright 2026 The pncc-features Authors. All Rights Reserved.
# Licensed under the Apache License, Version 2.0.

"""Cepstral speech features (MFCC, PNCC and variants) and verification metrics."""

from . import _core
from ._core import (
    PnccError,
    dct_ii,
    default_config_text,
    det_curve,
    eer,
    feature_types,
    load_wav,
    mean_power_normalize,
    min_dcf,
    pcen,
    power_law,
    read_features,
    synth_noise,
    synth_tone,
    write_wav,
)

__all__ = [
    "PnccError",
    "apply_stages",
    "config_fingerprint",
    "config_text",
    "dct_ii",
    "default_config_text",
    "det_curve",
    "eer",
    "extract",
    "feature_types",
    "load_wav",
    "mean_power_normalize",
    "mel_energies",
    "mel_filterbank",
    "min_dcf",
    "pcen",
    "power_law",
    "read_features",
    "synth_noise",
    "synth_tone",
    "write_wav",
]


def config_text(overrides=None):
    """Turns {"section.key": value} into config-file text, or passes a string through."""
    if overrides is None or isinstance(overrides, str):
        return overrides
    lines = []
    for key, value in overrides.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def extract(samples, feature="pncc", sample_rate=16000, config=None):
    """Feature matrix of shape (frames, coefficients)."""
    return _core.extract(samples, feature, sample_rate, config_text(config))


def config_fingerprint(config=None):
    return _core.config_fingerprint(config_text(config))


def mel_filterbank(config=None, sample_rate=16000):
    """(weights of shape (filters, fft_size // 2 + 1), center frequencies in Hz)."""
    return _core.mel_filterbank(config_text(config), sample_rate)


def mel_energies(samples, sample_rate=16000, config=None):
    return _core.mel_energies(samples, sample_rate, config_text(config))


def apply_stages(energies, feature, config=None):
    """Runs the post-filterbank stages of one feature type on mel energies."""
    return _core.apply_stages(energies, feature, config_text(config))
