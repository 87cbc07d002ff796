"""Realise every couple of a four-orbit corpus and read the invariant back.

usage: python3 scripts/roundtrip_corpus.py [K]   (K tangles per NonDeterminant diagram)
"""

import json
import sys

from brouwer.classify import conjugate_equal, generate_distinct, invariant_of, make_couple, realize
from brouwer.enumerate import DETERMINANT, NON_DETERMINANT, classify_all
from brouwer.tangle import MCGWord, tangle_of


def main(k=3):
    rows = classify_all(4)
    corpus = [make_couple(c.diagram, tangle_of(MCGWord())) for c in rows if c.verdict == DETERMINANT]
    for c in rows:
        if c.verdict == NON_DETERMINANT:
            corpus += generate_distinct(c.dw, k)
    bad = 0
    for c in corpus:
        rec = realize(c)
        ok = conjugate_equal(invariant_of(rec), c)
        bad += not ok
        print(json.dumps({"couple": c.to_json(), "lifts": len(rec.lifts), "ok": ok}))
    print(f"{len(corpus) - bad}/{len(corpus)} round trips", file=sys.stderr)
    return bad


if __name__ == "__main__":
    sys.exit(1 if main(int(sys.argv[1]) if len(sys.argv) > 1 else 3) else 0)
