"""Generators for the bundled expression corpora.

Four datasets, one infix expression per line:

- provable.txt: expressions that are identically true or false, each built
  around a `(v + c) / d` subterm so a run without early goal checks keeps
  rewriting until its budget runs out.
- nonprovable.txt: instances of the built-in non-provable patterns.
- nearmiss.txt: expressions that look like non-provable patterns but violate
  their side conditions; all are identically false.
- blowup.txt: provable expressions wrapped in products of sums, whose
  distributive expansion grows the e-graph quickly.

Generation is deterministic for a given seed; the CAVIAR_SEED environment
variable (default 0) controls it.
"""

from __future__ import annotations

import argparse
import importlib.resources
import os
import random
import sys

CORPUS_NAMES = ("provable.txt", "nonprovable.txt", "nearmiss.txt", "blowup.txt")


def corpus_path(name: str):
    """Filesystem path of a bundled corpus."""
    return importlib.resources.files("caviar") / "corpora" / name


def corpus_text(name: str) -> str:
    return corpus_path(name).read_text(encoding="utf-8")


def _div_term(rng: random.Random) -> str:
    """A `(v + c) / d` subterm; these keep rewriting productive forever."""
    v = f"v{rng.randrange(5)}"
    c = rng.randrange(1, 9)
    d = rng.randrange(2, 9)
    return f"({v} + {c}) / {d}"


def _term(rng: random.Random) -> str:
    """A small integer term containing a division subterm."""
    base = _div_term(rng)
    style = rng.randrange(4)
    if style == 0:
        return base
    if style == 1:
        return f"{base} + {rng.randrange(1, 9)}"
    if style == 2:
        return f"{base} * {rng.randrange(2, 5)}"
    return f"{base} - v{rng.randrange(5)}"


def gen_provable(rng: random.Random) -> list[str]:
    lines = []
    for _ in range(15):
        t = _term(rng)
        lines.append(f"{t} <= {t}")
    for _ in range(12):
        t = _term(rng)
        lines.append(f"{t} < {t}")
    for _ in range(12):
        t = _term(rng)
        lines.append(f"{t} != {t}")
    for _ in range(12):
        t = _term(rng)
        lines.append(f"{t} == {t}")
    for _ in range(10):
        a, b = _term(rng), _term(rng)
        lines.append(f"min({a}, {b}) <= {a}")
    for _ in range(10):
        a, b = _term(rng), _term(rng)
        lines.append(f"{a} <= max({a}, {b})")
    for _ in range(10):
        t = _term(rng)
        lines.append(f"{t} <= {t} + {rng.randrange(0, 9)}")
    for _ in range(10):
        v = f"v{rng.randrange(5)}"
        a = rng.randrange(1, 9)
        b = rng.randrange(2, 9)
        lines.append(f"({v} + {a}) / {b} * {b} <= {v} + {a}")
    for _ in range(10):
        v = f"v{rng.randrange(5)}"
        m = rng.randrange(2, 17)
        lines.append(f"{v} % {m} < {m} || ({v} + 1) / 2 < 0")
    for _ in range(10):
        v = f"v{rng.randrange(5)}"
        m = rng.randrange(2, 17)
        lines.append(f"{m} <= {v} % {m} && ({v} + 1) / 2 <= ({v} + 1) / 2")
    return lines


def gen_nonprovable(rng: random.Random) -> list[str]:
    lines = []
    for _ in range(5):
        lines.append(f"v{rng.randrange(5)} != {rng.randrange(1, 50)}")
    for _ in range(5):
        m = rng.randrange(4, 17)
        c = rng.randrange(0, m - 1)
        lines.append(f"{c} < v{rng.randrange(5)} % {m}")
    for _ in range(5):
        m = rng.randrange(4, 17)
        c = rng.randrange(1, m)
        lines.append(f"v{rng.randrange(5)} % {m} < {c}")
    for _ in range(5):
        lines.append(f"v{rng.randrange(5)} == {rng.randrange(1, 50)}")
    for _ in range(5):
        lines.append(f"{rng.randrange(1, 50)} < v{rng.randrange(5)}")
    return lines


def gen_nearmiss(rng: random.Random) -> list[str]:
    """Near misses of the modulo patterns; every line is identically false."""
    lines = []
    for _ in range(5):
        m = rng.randrange(2, 17)
        lines.append(f"{m - 1} < v{rng.randrange(5)} % {m}")
    for _ in range(5):
        m = rng.randrange(2, 17)
        lines.append(f"{m + rng.randrange(0, 5)} < v{rng.randrange(5)} % {m}")
    for _ in range(5):
        m = rng.randrange(2, 17)
        lines.append(f"v{rng.randrange(5)} % {m} < 0")
    for _ in range(5):
        m = rng.randrange(2, 17)
        lines.append(f"v{rng.randrange(5)} % {m} < -{rng.randrange(1, 9)}")
    return lines


def gen_blowup(rng: random.Random) -> list[str]:
    lines = []
    for i in range(12):
        k = 3 + (i % 4)
        factors = " * ".join(
            f"(v{rng.randrange(5)} + v{rng.randrange(5)})" for _ in range(k))
        v = f"v{rng.randrange(5)}"
        lines.append(f"{v} + {factors} * 0 <= {v}")
    return lines


def generate_all(seed: int) -> dict[str, str]:
    out = {}
    for name, gen in (("provable.txt", gen_provable),
                      ("nonprovable.txt", gen_nonprovable),
                      ("nearmiss.txt", gen_nearmiss),
                      ("blowup.txt", gen_blowup)):
        rng = random.Random(seed)
        header = f"# {name}: generated dataset, seed={seed}\n"
        out[name] = header + "\n".join(gen(rng)) + "\n"
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="regenerate the bundled corpora")
    ap.add_argument("--out", default=None,
                    help="output directory (default: the installed corpora dir)")
    args = ap.parse_args(argv)
    seed = int(os.environ.get("CAVIAR_SEED", "0"))
    outdir = args.out if args.out is not None else os.fspath(
        importlib.resources.files("caviar") / "corpora")
    os.makedirs(outdir, exist_ok=True)
    for name, text in generate_all(seed).items():
        path = os.path.join(outdir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
