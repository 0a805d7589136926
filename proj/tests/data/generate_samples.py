#!/usr/bin/env python3
# Copyright 2026 The maskfx Authors. All Rights Reserved.
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

"""Writes the synthetic sample images and manifests under tests/data.

Masks are hand-built scenes with ragged edges and specks so the morphology
stage has work to do. RLE encoding here is independent of the C++ codec.
Output is deterministic; rerunning reproduces the committed files.
"""

import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent


def write_ppm(path, img):
    h, w, _ = img.shape
    path.write_bytes(b"P6\n%d %d\n255\n" % (w, h) + img.astype(np.uint8).tobytes())


def rle(mask):
    flat = mask.astype(np.uint8).flatten(order="F")
    counts, cur, run = [], 0, 0
    for v in flat:
        if v != cur:
            counts.append(run)
            run, cur = 0, v
        run += 1
    counts.append(run)
    return counts


def instance(class_id, name, score, mask):
    return {
        "class_id": class_id,
        "class_name": name,
        "score": score,
        "mask": {"format": "rle", "size": [mask.shape[0], mask.shape[1]],
                 "counts": rle(mask)},
    }


def write_manifest(path, shape, instances):
    doc = {"image_width": shape[1], "image_height": shape[0],
           "instances": instances}
    path.write_text(json.dumps(doc, indent=1) + "\n")


def backdrop(rng, h, w, tint):
    y, x = np.mgrid[0:h, 0:w]
    base = np.stack([
        60 + 120 * x / w + 30 * np.sin(y / 7.0),
        80 + 100 * y / h + 25 * np.cos(x / 9.0),
        90 + 60 * (x + y) / (w + h),
    ], axis=-1) + np.asarray(tint)
    base += rng.normal(0, 9, base.shape)
    return np.clip(np.rint(base), 0, 255)


def ragged(rng, mask, p=0.08):
    # Flip a fraction of boundary pixels and sprinkle specks.
    m = mask.copy()
    edge = m ^ np.roll(m, 1, 0) | m ^ np.roll(m, 1, 1)
    flips = edge & (rng.random(m.shape) < p * 4)
    m ^= flips
    specks = rng.random(m.shape) < 0.0015
    return m | specks


def ellipse(h, w, cy, cx, ry, rx):
    y, x = np.mgrid[0:h, 0:w]
    return ((y - cy) / ry) ** 2 + ((x - cx) / rx) ** 2 <= 1.0


def rect(h, w, y0, x0, y1, x1):
    m = np.zeros((h, w), bool)
    m[y0:y1, x0:x1] = True
    return m


def person_bus(rng):
    h, w = 120, 160
    img = backdrop(rng, h, w, (0, 0, 0))
    bus = rect(h, w, 30, 20, 100, 150)
    body = ellipse(h, w, 78, 60, 30, 12) | ellipse(h, w, 42, 60, 8, 7)
    img[bus] = [200, 170, 40] + rng.normal(0, 6, (bus.sum(), 3))
    for x0 in range(30, 145, 22):
        win = rect(h, w, 38, x0, 55, x0 + 14)
        img[win] = [120, 160, 210]
    img[body] = [170, 90, 80] + rng.normal(0, 10, (body.sum(), 3))
    dog = ellipse(h, w, 108, 130, 6, 10)
    img[dog] = [90, 60, 30]
    insts = [
        instance(6, "bus", 0.97, ragged(rng, bus & ~body)),
        instance(1, "person", 0.93, ragged(rng, body)),
        instance(18, "dog", 0.31, dog),
    ]
    return np.clip(img, 0, 255), insts


def street(rng):
    h, w = 96, 128
    img = backdrop(rng, h, w, (-20, -10, 10))
    insts = []
    for i, (cy, cx) in enumerate([(70, 20), (72, 62), (68, 104)]):
        car = ellipse(h, w, cy, cx, 9, 17) | rect(h, w, cy - 2, cx - 17, cy + 8, cx + 17)
        img[car] = np.array([[180, 30, 30], [30, 60, 170], [220, 220, 230]][i]) + \
            rng.normal(0, 8, (car.sum(), 3))
        insts.append(instance(3, "car", 0.8 + 0.05 * i, ragged(rng, car)))
    light = rect(h, w, 10, 58, 40, 66)
    img[light] = [30, 30, 30]
    img[14:20, 60:64] = [240, 30, 20]
    insts.append(instance(10, "traffic light", 0.77, light))
    return np.clip(img, 0, 255), insts


def portrait(rng):
    h, w = 112, 96
    y, x = np.mgrid[0:h, 0:w]
    img = backdrop(rng, h, w, (10, 20, -10))
    img += (((x // 8 + y // 8) % 2) * 40 - 20)[..., None]
    head = ellipse(h, w, 40, 48, 22, 18)
    torso = ellipse(h, w, 100, 48, 30, 34)
    body = head | torso
    shade = 180 - 0.6 * np.hypot(y - 40, x - 44)
    img[body] = np.stack([shade, shade * 0.8, shade * 0.7], -1)[body]
    img[body] += rng.normal(0, 5, (body.sum(), 3))
    insts = [instance(1, "person", 0.99, ragged(rng, body, 0.05))]
    return np.clip(img, 0, 255), insts


def main():
    rng = np.random.default_rng(20260418)
    for name, make in [("person_bus", person_bus), ("street", street),
                       ("portrait", portrait)]:
        img, insts = make(rng)
        write_ppm(OUT / f"{name}.ppm", img)
        write_manifest(OUT / f"{name}.json", img.shape, insts)

    # Noise images for identity renders; most carry one random blob.
    ident = OUT / "identity"
    ident.mkdir(exist_ok=True)
    for i in range(10):
        h, w = int(rng.integers(17, 80)), int(rng.integers(17, 80))
        img = rng.integers(0, 256, (h, w, 3))
        blob = ellipse(h, w, rng.integers(0, h), rng.integers(0, w),
                       rng.integers(3, h), rng.integers(3, w))
        write_ppm(ident / f"img{i}.ppm", img)
        cid, cname = [(1, "person"), (3, "car"), (6, "bus"), (18, "dog")][i % 4]
        insts = [instance(cid, cname, 0.9, blob)] if i % 3 else []
        write_manifest(ident / f"img{i}.json", img.shape, insts)

    empty = {"image_width": 4, "image_height": 3, "instances": []}
    (OUT / "empty.json").write_text(json.dumps(empty) + "\n")


if __name__ == "__main__":
    main()
