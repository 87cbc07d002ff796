"""Write svg and ascii drawings of the four-orbit NonDeterminant diagrams.

usage: python3 scripts/render_figures.py [OUTDIR]
"""

import sys
from pathlib import Path

from brouwer.enumerate import NON_DETERMINANT, classify_all
from brouwer.render import render


def main(outdir="figures"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    rows = [c for c in classify_all(4) if c.verdict == NON_DETERMINANT]
    for i, c in enumerate(rows, 1):
        for fmt, ext in (("svg", "svg"), ("ascii", "txt")):
            (out / f"nondet_{i}.{ext}").write_text(render(c.dw, fmt))
    print(f"wrote {2 * len(rows)} files to {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
