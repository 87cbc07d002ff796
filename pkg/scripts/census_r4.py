"""Census of four-orbit diagrams: verdict counts, the NonDeterminant list and
the non-crossing partner of each crossing one."""

from collections import Counter

from brouwer.classify import crossing_swap
from brouwer.diagram import adjacency_profile, crossings, format_diagram
from brouwer.enumerate import NON_DETERMINANT, census, classify_all


def main():
    rows = classify_all(4)
    print(census(4))
    print(dict(Counter(c.verdict for c in rows)))
    for c in rows:
        if c.verdict != NON_DETERMINANT:
            continue
        d = c.diagram
        line = f"{format_diagram(d)}  r'={adjacency_profile(d).r_prime}  {c.dw.wall_text()}"
        if crossings(d):
            flow, pair = crossing_swap(d)
            line += f"  swap {pair} -> {format_diagram(flow)}"
        print(line)
    for c in rows:
        if c.note or c.obstruction:
            print(f"{format_diagram(c.diagram)}  {c.verdict}  {c.note or c.obstruction}")


if __name__ == "__main__":
    main()
