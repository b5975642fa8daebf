"""Short end-to-end training run on a small synthetic dataset.

Alternates phase A (age discriminator + generator) and phase T
(transition discriminator + generator) and prints the loss trajectory.
A few epochs on 20 identities is enough to watch the losses move off
their ignorant fixed points; see demos/04_age_progression.py for a
longer run with visual output.
"""

import os

from agegan.datagen import make_dataset
from agegan.trainer import TrainConfig, train

OUT = os.path.join(os.path.dirname(__file__), "out", "train_small")


def main():
    dataset = make_dataset(20, 7, 32, seed=11)
    print("dataset: %d singles, %d adjacent pairs"
          % (len(dataset.singles), len(dataset.pairs)))
    config = TrainConfig(epochs=3, seed=4)

    def progress(report):
        if report.iteration % 10 == 0:
            d = report.d_age_loss if report.phase == "A" else report.d_trans_loss
            print("iter %4d phase %s  d=%.4f  g=%.4f"
                  % (report.iteration, report.phase, d, report.g_total))

    bundle, reports = train(dataset, config, out_dir=OUT, progress=progress)
    print("finished %d iterations; checkpoint in %s" % (len(reports), OUT))


if __name__ == "__main__":
    main()
