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
"""Regenerates the bundled 512x256 test scenes under tests/data.

Each scene is a procedural outdoor-like panorama (sky gradient, horizon,
textured ground, a few objects) with a matching saliency map and a sparse
fixation map sampled from it. Output is deterministic for a given numpy.
"""

import argparse
import pathlib

import numpy as np
from PIL import Image

W, H = 512, 256


def grid():
  v, u = np.mgrid[0:H, 0:W].astype(np.float64)
  lat = (0.5 - (v + 0.5) / H) * np.pi
  lon = ((u + 0.5) / W) * 2 * np.pi - np.pi
  return lat, lon


def smooth_noise(rng, scale):
  """Bilinearly upsampled white noise: cheap band-limited texture."""
  gh, gw = max(2, H // scale), max(2, W // scale)
  coarse = rng.standard_normal((gh + 1, gw + 1))
  y = np.linspace(0, gh, H, endpoint=False)
  x = np.linspace(0, gw, W, endpoint=False)
  y0, x0 = np.floor(y).astype(int), np.floor(x).astype(int)
  fy, fx = (y - y0)[:, None], (x - x0)[None, :]
  a = coarse[y0][:, x0]
  b = coarse[y0][:, x0 + 1]
  c = coarse[y0 + 1][:, x0]
  d = coarse[y0 + 1][:, x0 + 1]
  return (a * (1 - fx) + b * fx) * (1 - fy) + (c * (1 - fx) + d * fx) * fy


def gc_dist(lat, lon, lat0, lon0):
  s = (np.sin((lat - lat0) / 2) ** 2 +
       np.cos(lat) * np.cos(lat0) * np.sin((lon - lon0) / 2) ** 2)
  return 2 * np.arcsin(np.sqrt(np.clip(s, 0, 1)))


def scene(seed):
  rng = np.random.default_rng(seed)
  lat, lon = grid()
  horizon = 0.05 * np.sin(3 * lon + seed)
  sky = lat > horizon

  img = np.zeros((H, W, 3))
  sky_top = rng.uniform([60, 110, 180], [110, 160, 230])
  sky_low = rng.uniform([170, 190, 210], [220, 230, 245])
  t = np.clip(lat / (np.pi / 2), 0, 1)[..., None]
  img[:] = sky_low * (1 - t) + sky_top * t
  img += 6 * smooth_noise(rng, 32)[..., None]

  ground = rng.uniform([70, 80, 40], [120, 130, 80])
  tex = 18 * smooth_noise(rng, 4) + 10 * smooth_noise(rng, 16)
  g = ground + tex[..., None] * np.array([1.0, 0.9, 0.7])
  img = np.where(sky[..., None], img, g)

  sal = 0.6 * np.exp(-lat ** 2 / (2 * 0.35 ** 2))
  for _ in range(3):
    lat0 = rng.uniform(-0.25, 0.2)
    lon0 = rng.uniform(-np.pi, np.pi)
    r = rng.uniform(0.12, 0.25)
    d = gc_dist(lat, lon, lat0, lon0)
    color = rng.uniform(20, 235, 3)
    stripes = 25 * np.sign(np.sin(40 * d))
    obj = d < r
    img = np.where(obj[..., None], color + stripes[..., None], img)
    sal += rng.uniform(0.6, 1.0) * np.exp(-d ** 2 / (2 * (0.8 * r) ** 2))

  img = np.clip(np.rint(img), 0, 255).astype(np.uint8)
  sal = sal / sal.max()

  # Fixations: 60 draws proportional to saliency.
  p = (sal / sal.sum()).ravel()
  idx = rng.choice(p.size, size=60, replace=False, p=p)
  fix = np.zeros(H * W, np.uint8)
  fix[idx] = 255
  return img, sal, fix.reshape(H, W)


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--out", default=str(pathlib.Path(__file__).parent.parent /
                                       "tests" / "data"))
  args = ap.parse_args()
  out = pathlib.Path(args.out)
  out.mkdir(parents=True, exist_ok=True)
  for i, seed in enumerate((11, 23, 37)):
    img, sal, fix = scene(seed)
    Image.fromarray(img).save(out / f"scene{i}.png")
    sal16 = np.rint(sal * 65535).astype(np.uint16)
    Image.fromarray(sal16).save(out / f"scene{i}_sal.png")
    Image.fromarray(fix).save(out / f"scene{i}_fix.png")


if __name__ == "__main__":
  main()
