"""Dev sweep: does horizontal-flip augmentation help the block-list classifier?"""
import sys
import time

import numpy as np

sys.path.insert(0, "/root/pkg/tests")
import _artifacts as A

from stackforge.blocklist import accuracy, codebook_from_manifest, train_classifier
from stackforge.datagen import load_manifest, load_split
from stackforge.geometry import Silhouette64


class _Aug:
    __slots__ = ("sil", "counts")

    def __init__(self, sil, counts):
        self.sil = sil
        self.counts = counts


def hflip(recs):
    return [
        _Aug(Silhouette64(np.ascontiguousarray(r.sil.pixels[:, ::-1])), r.counts)
        for r in recs
    ]


def main():
    corpus, _ = A.full_corpus()
    manifest = load_manifest(corpus)
    codebook = codebook_from_manifest(manifest)
    train_recs = load_split(corpus, "train")
    test_recs = load_split(corpus, "test")
    flipped = hflip(train_recs)

    for name, recs, steps in [
        ("hflip-3000", train_recs + flipped, 3000),
        ("hflip-6000", train_recs + flipped, 6000),
        ("noaug-6000", train_recs, 6000),
    ]:
        t0 = time.time()
        model, _ = train_classifier(recs, codebook, steps=steps, seed=0)
        tr = accuracy(model, train_recs)
        te = accuracy(model, test_recs)
        print(f"[sweep] {name}: train={tr:.4f} test={te:.4f} ({time.time()-t0:.0f}s)",
              flush=True)


if __name__ == "__main__":
    main()
