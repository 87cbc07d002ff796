"""Command line front end.  Reports are JSON lines; exit codes are 0 for success
or an affirmative verdict, 1 for a negative verdict and 2 for bad input."""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .braid import (
    comb,
    epsilon_total,
    epsilon_vector,
    factor_free_half_twists,
    format_braid,
    is_pure,
    normal_form,
    parse_braid,
    permutation,
)
from .classify import (
    InvariantCouple,
    conjugate_equal,
    deflector,
    invariant_of,
    last_strand_linking,
    lifts_word,
    mcg_of_braid,
    parse_couple,
    parse_recipe,
    realize,
)
from .diagram import adjacency_profile, format_diagram, parse_diagram
from .enumerate import classify_all, enumerate_diagrams, load_annotations
from .render import FORMATS, render
from .tangle import adaptedness, curve_from_slope, parse_word, tangle_of
from .walls import compute_walls, flow_walls


def _line(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _emit(lines, out: str | None) -> None:
    text = "".join(_line(x) + "\n" for x in lines)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _fail(msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def bad_input_exits_2(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
            _fail(str(exc))

    return wrapper


@click.group()
def main():
    """Diagrams, walls, braids and tangles of Brouwer mapping classes."""


@main.command("enumerate")
@click.option("--orbits", type=int, required=True, help="number of orbits, 1 to 6")
@click.option("--classify", "do_classify", is_flag=True, help="add walls and a verdict to each line")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--annotations", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON list of diagrams marked forbidden")
@bad_input_exits_2
def cmd_enumerate(orbits, do_classify, out, annotations):
    """One line per diagram class with the given number of orbits."""
    if not 1 <= orbits <= 6:
        _fail(f"--orbits must be between 1 and 6, got {orbits}")
    if do_classify:
        forbidden = load_annotations(annotations) if annotations else frozenset()
        rows = [c.report() for c in classify_all(orbits, forbidden)]
    else:
        rows = [
            {"diagram": format_diagram(d), "rprime": adjacency_profile(d).r_prime}
            for d in enumerate_diagrams(orbits)
        ]
    _emit(rows, out)
    click.echo(f"{len(rows)} diagrams with {orbits} orbits", err=True)


def _load_couple(path: str) -> InvariantCouple:
    data = json.loads(Path(path).read_text())
    if "flow" in data:
        return invariant_of(parse_recipe(data))
    return parse_couple(data)


@main.command("equal")
@click.argument("couple_a", type=click.Path(dir_okay=False))
@click.argument("couple_b", type=click.Path(dir_okay=False))
def cmd_equal(couple_a, couple_b):
    """Decide conjugacy from two couple (or recipe) files."""
    try:
        a, b = _load_couple(couple_a), _load_couple(couple_b)
    except (ValueError, KeyError, OSError) as exc:
        _fail(str(exc))
    same = conjugate_equal(a, b)
    click.echo("conjugate" if same else "not-conjugate")
    sys.exit(0 if same else 1)


@main.command("braid")
@click.argument("op", type=click.Choice(["nf", "eps", "comb", "factor"]))
@click.argument("word")
@bad_input_exits_2
def cmd_braid(op, word):
    """Normal form, linking numbers, combing or half-twist factorization.

    WORD looks like "n=3: [1,2,-1]"; k stands for sigma_k and -k for its inverse.
    """
    b = parse_braid(word)
    if op == "nf":
        nf = normal_form(b)
        _emit([{"braid": format_braid(b), "nf": str(nf), "identity": nf.infimum == 0 and not nf.factors}], None)
        return
    if not is_pure(b):
        _fail(f"{op} needs a pure braid; {format_braid(b)} has permutation {list(permutation(b))}")
    if op == "eps":
        _emit([{"braid": format_braid(b), "eps": epsilon_vector(b), "total": epsilon_total(b)}], None)
    elif op == "comb":
        _emit([{"braid": format_braid(b), "comb": comb(b).text()}], None)
    else:
        if epsilon_total(b) != 0:
            _fail("precondition violated: the linking number of rho is trivial (total linking is "
                  f"{epsilon_total(b)}, not 0)")
        factors, _ = factor_free_half_twists(b)
        _emit([f.to_json() for f in factors], None)


@main.command("tangle")
@click.argument("word")
@click.option("--braid", "as_braid", is_flag=True, help="WORD is a 3-strand braid fixing strand 3")
@bad_input_exits_2
def cmd_tangle(word, as_braid):
    """Tangle of a mapping class word such as "S^2 T^-1"."""
    w = mcg_of_braid(parse_braid(word)) if as_braid else parse_word(word)
    t = tangle_of(w)
    _emit([{"word": str(w), "tangle": t.notation().removeprefix("tangle="), "adapted": adaptedness(t)}], None)


def _slope(text: str):
    p, _, q = text.partition("/")
    return curve_from_slope(int(p), int(q or 1))


@main.command("deflector")
@click.argument("alpha")
@click.argument("beta")
@bad_input_exits_2
def cmd_deflector(alpha, beta):
    """Lifted half twists carrying the family separated by slope ALPHA to the one
    separated by slope BETA (slopes as p/q, the horizontal family is 0/1)."""
    lifts = deflector(_slope(alpha), _slope(beta))
    rows = [lf.to_json() for lf in lifts]
    rows.append({"lifts": len(lifts), "eps_total": last_strand_linking(lifts_word(lifts))})
    _emit(rows, None)


@main.command("realize")
@click.argument("couple", type=click.Path(dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@bad_input_exits_2
def cmd_realize(couple, out):
    """Recipe (flow diagram plus lifted half twists) for a couple file."""
    rec = realize(parse_couple(json.loads(Path(couple).read_text())))
    _emit([rec.to_json()], out)


@main.command("render")
@click.argument("diagram")
@click.option("--format", "fmt", default="ascii", type=click.Choice(FORMATS))
@click.option("--flow", is_flag=True, help="draw the flow walls instead of the irreducible realisation")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@bad_input_exits_2
def cmd_render(diagram, fmt, flow, out):
    """Draw a diagram given as "r=2; cyc=1- 1+ 2- 2+"."""
    d = parse_diagram(diagram)
    text = render(flow_walls(d) if flow else compute_walls(d), fmt)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()
