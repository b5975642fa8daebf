"""Train, then age held-out faces across all seven target groups.

Produces the 7-column progression strips: for each probe face, one output
image per target age group, written as PPM files, plus the oracle aging
report over the full source-by-target grid.
"""

import os

import numpy as np

from agegan.datagen import make_dataset
from agegan.evalmetrics import evaluate_model
from agegan.labels import NUM_GROUPS, AgeGroup
from agegan.ppm import write_ppm
from agegan.tensor import Tensor
from agegan.trainer import TrainConfig, train

OUT = os.path.join(os.path.dirname(__file__), "out", "progression")


def main():
    os.makedirs(OUT, exist_ok=True)
    train_ds = make_dataset(60, 7, 32, seed=21)
    test_ds = make_dataset(8, 7, 32, seed=2100)
    config = TrainConfig(epochs=12, seed=5)
    print("training on %d singles for %d epochs..."
          % (len(train_ds.singles), config.epochs))
    bundle, _ = train(train_ds, config, out_dir=OUT)

    for i, sample in enumerate(test_ds.singles[:4]):
        write_ppm(os.path.join(OUT, "probe%d_input_g%d.ppm"
                               % (i, sample.group.index)), sample.image)
        x = Tensor(sample.image.data[None])
        for g in range(NUM_GROUPS):
            aged = bundle.gen.forward(x, [AgeGroup(g)], training=False)
            write_ppm(os.path.join(OUT, "probe%d_aged_g%d.ppm" % (i, g)),
                      np.clip(aged.data[0], -1.0, 1.0))
    print("wrote progression strips for 4 probes to %s" % OUT)

    report = evaluate_model(bundle, test_ds,
                            out_csv=os.path.join(OUT, "aging_report.csv"))
    print("mean oracle age-hit rate: %.3f" % report.mean_hit_rate())
    print("mean identity drift:      %.4f" % report.mean_drift())
    print("(demo-scale run; the desk-scale reference in the README uses "
          "200 identities for 30 epochs and scores much higher)")


if __name__ == "__main__":
    main()
