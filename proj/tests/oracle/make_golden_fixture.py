#!/usr/bin/env python3
# Copyright 2026 The FashionTag Authors. All Rights Reserved.
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
"""Writes the golden-metrics fixture: gold records and model predictions.

Predictions deliberately mix outcome types: exact matches, case and
whitespace variants, wrong categories/materials, partial tag overlap,
empty tag sets, non-JSON captions, missing fields and wrong types.
"""

import json
import random
import sys

CATEGORIES = ["top", "bottom", "dress", "layer", "shoes"]  # no accessory rows
COLORS = ["black", "white", "navy", "red", "beige", "multi", "unknown"]
MATERIALS = ["cotton", "silk", "denim", "wool", "polyester", "leather", "unknown"]
STYLES = ["casual", "classic", "workwear", "sexy", "glamorous", "edgy", "bohemian",
          "preppy", "minimalist", "sporty"]
OCCASIONS = ["everyday", "work", "party", "date", "gym", "workout", "beach"]


def compact(obj):
  return json.dumps(obj, separators=(",", ":"))


def main(out_dir):
  rng = random.Random(461)
  gold_lines, pred_lines = [], []
  for i in range(120):
    gold = {
        "category": CATEGORIES[min(rng.randrange(7), 4)],
        "primary_color": rng.choice(COLORS),
        "material": rng.choice(MATERIALS),
        "style_tags": sorted(set(rng.sample(STYLES, rng.randrange(0, 4)))),
        "occasion_tags": sorted(set(rng.sample(OCCASIONS, rng.randrange(1, 3)))),
    }
    item_id = "g%03d" % i
    pred = dict(gold)
    kind = i % 12
    if kind == 1:
      pred["category"] = rng.choice([c for c in CATEGORIES if c != gold["category"]])
    elif kind == 2:
      pred["material"] = gold["material"].upper() if i % 24 == 2 else " %s " % gold["material"].title()
      pred["category"] = gold["category"].capitalize()
    elif kind == 3:
      pred["material"] = rng.choice([m for m in MATERIALS if m != gold["material"]])
    elif kind == 4:
      pred["style_tags"] = list(reversed(gold["style_tags"])) + gold["style_tags"][:1] + ["edgy"]
    elif kind == 5:
      pred["style_tags"] = []
      pred["occasion_tags"] = ["everyday"]
    elif kind == 6:
      pred["primary_color"] = "gray"
      pred["occasion_tags"] = rng.sample(OCCASIONS, 3)
    elif kind == 7:
      pred["category"] = "hat"  # out of vocabulary, still schema-valid
      pred["extra"] = {"note": "ignored"}
    pred_text = compact(pred)
    if kind == 8 and i % 24 == 8:
      pred_text = "A %s %s %s." % (gold["primary_color"], gold["material"], gold["category"])
    elif kind == 8:
      del pred["occasion_tags"]
      pred_text = compact(pred)
    elif kind == 9 and i % 24 == 9:
      pred["style_tags"] = ",".join(pred["style_tags"])
      pred_text = compact(pred)
    elif kind == 10:
      pred_text = json.dumps(pred, indent=1)  # whitespace is fine on input
    elif kind == 11 and i % 36 == 11:
      pred_text = compact(pred)[:-5]
    gold_lines.append(compact({"item_id": item_id, "record": gold}))
    pred_lines.append(compact({"item_id": item_id, "prediction_text": pred_text}))
  # Predictions in a different order than gold to exercise id matching.
  rng.shuffle(pred_lines)
  with open(out_dir + "/golden_gold.jsonl", "w") as f:
    f.write("\n".join(gold_lines) + "\n")
  with open(out_dir + "/golden_pred.jsonl", "w") as f:
    f.write("\n".join(pred_lines) + "\n")


if __name__ == "__main__":
  main(sys.argv[1])
