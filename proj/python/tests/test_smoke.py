# Copyright 2026 The dwtmark Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import dwtmark


@pytest.fixture(scope="module")
def host():
    return dwtmark.synth("checker", 128)


@pytest.fixture(scope="module")
def mark():
    rng = np.random.default_rng(7)
    return rng.integers(0, 2, size=(8, 32), dtype=np.uint8)


def test_embed_extract_round_trip(host, mark):
    marked, key = dwtmark.embed(host, mark, seed=42)
    assert marked.shape == host.shape
    assert (key.rows, key.cols, key.seed) == (8, 32, 42)
    np.testing.assert_array_equal(dwtmark.extract(marked, key), mark)
    stored = dwtmark.quantize(marked)
    np.testing.assert_array_equal(dwtmark.extract(stored, key), mark)
    assert dwtmark.psnr(host, stored) > 40.0
    assert dwtmark.pearson(host, stored) > 0.999


def test_key_round_trip(tmp_path, host, mark):
    _, key = dwtmark.embed(host, mark, seed=3)
    assert dwtmark.Key.parse(key.serialize()) == key
    path = str(tmp_path / "k.key")
    key.save(path)
    assert dwtmark.Key.load(path) == key
    np.testing.assert_array_equal(key.r, dwtmark.generate_r(mark.size, 3))
    assert key.serialize().startswith("WMKEY1\n")


def test_errors_carry_category(mark):
    with pytest.raises(dwtmark.Error) as info:
        dwtmark.embed(np.full((100, 100, 3), 0.5), mark, seed=1)
    assert info.value.args[1] == "dimension"
    with pytest.raises(dwtmark.Error) as info:
        dwtmark.Key.parse("WMKEY2\n")
    assert info.value.args[1] == "key-format"
    assert issubclass(dwtmark.Error, ValueError)


def test_wavelet_perfect_reconstruction():
    x = np.random.default_rng(1).random((64, 48))
    pyr = dwtmark.dwt2_forward(x, 3)
    assert pyr.subband_count() == 10
    assert pyr.ll.shape == (8, 6)
    assert [d[0].shape for d in pyr.details] == [(32, 24), (16, 12), (8, 6)]
    assert np.max(np.abs(dwtmark.dwt2_inverse(pyr) - x)) < 1e-9
    const = dwtmark.dwt2_forward(np.full((64, 64), 0.25), 3)
    np.testing.assert_allclose(const.ll, 2.0, atol=1e-12)


def test_colorspace_round_trip():
    rgb = np.random.default_rng(2).random((16, 16, 3))
    ycc = dwtmark.rgb_to_ycbcr(rgb)
    np.testing.assert_allclose(dwtmark.ycbcr_to_rgb(ycc), rgb, atol=1e-12)
    gray = dwtmark.rgb_to_ycbcr(np.full((8, 8, 3), 0.3))
    np.testing.assert_allclose(gray[..., 1:], 0.5, atol=1e-6)


def test_attacks(host):
    np.testing.assert_allclose(dwtmark.wavelet_compress(host, 0.0), host,
                               atol=1e-9)
    cropped = dwtmark.crop(host, (0, 0, 64, 64))
    assert np.all(cropped[:64, :64] == 0.0)
    np.testing.assert_array_equal(cropped[64:], host[64:])
    with pytest.raises(dwtmark.Error):
        dwtmark.crop(host, (100, 0, 64, 64))


def test_metrics():
    a = np.full((8, 8, 3), 100 / 255)
    b = np.full((8, 8, 3), 101 / 255)
    assert dwtmark.psnr(a, b) == pytest.approx(20 * math.log10(255))
    assert math.isinf(dwtmark.psnr(a, a))
    w = np.array([[1, 0, 1, 1]], dtype=np.uint8)
    assert dwtmark.nc(w, w) == 1.0
    assert dwtmark.ber(w, 1 - w) == 100.0


def test_files(tmp_path, mark):
    img = dwtmark.synth("gradient", 64)
    path = str(tmp_path / "g.ppm")
    dwtmark.write_image(img, path)
    np.testing.assert_array_equal(dwtmark.read_image(path),
                                  dwtmark.quantize(img))
    wpath = str(tmp_path / "w.pbm")
    dwtmark.write_watermark(mark, wpath)
    np.testing.assert_array_equal(dwtmark.read_watermark(wpath), mark)
