#!/usr/bin/env python3
# Copyright 2026 The ODIC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the 256x128 SSIM reference pair and its oracle values.

The oracle is scikit-image's SSIM (Gaussian window sigma 1.5, population
covariance), cropped to windows fully inside the image, then averaged
either uniformly or with cos-latitude row weights.
"""

import pathlib

import numpy as np
from skimage.metrics import structural_similarity

W, H = 256, 128
PAD = 5


def write_pgm(path, a):
  with open(path, "wb") as f:
    f.write(b"P5\n%d %d\n255\n" % (a.shape[1], a.shape[0]))
    f.write(a.astype(np.uint8).tobytes())


def main():
  out = pathlib.Path(__file__).parent.parent / "tests" / "data"
  rng = np.random.default_rng(2026)
  v, u = np.mgrid[0:H, 0:W]
  ref = 128 + 60 * np.sin(u / 9.0) * np.cos(v / 7.0) + 20 * rng.standard_normal((H, W))
  ref = np.clip(np.rint(ref), 0, 255)
  dist = np.clip(np.rint(ref + 12 * rng.standard_normal((H, W))), 0, 255)
  write_pgm(out / "ssim_ref.pgm", ref)
  write_pgm(out / "ssim_dist.pgm", dist)

  _, smap = structural_similarity(ref, dist, gaussian_weights=True, sigma=1.5,
                                  use_sample_covariance=False, data_range=255,
                                  full=True)
  valid = smap[PAD:H - PAD, PAD:W - PAD]
  rows = np.arange(PAD, H - PAD)
  w = np.cos((rows + 0.5 - H / 2) * np.pi / H)
  ws = float((valid * w[:, None]).sum() / (w.sum() * valid.shape[1]))
  print(f"mean_ssim {valid.mean():.17g}")
  print(f"ws_ssim {ws:.17g}")


if __name__ == "__main__":
  main()
