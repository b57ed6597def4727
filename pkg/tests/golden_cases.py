"""Inputs for the stored kernel outputs in ``tests/golden`` and a writer for them.

Run ``python3 tests/golden_cases.py`` to rewrite the files after an intended
change of canonical output; the golden test compares byte-for-byte.
"""

import json
import pathlib

from curvereg.curves import giaimo_curve
from curvereg.ideals import Ideal
from curvereg.invariants import hilbert_series
from curvereg.polyring import Ring
from curvereg.resolution import betti_numbers

GOLDEN = pathlib.Path(__file__).parent / "golden"


def _ideal(nvars, *texts):
    R = Ring(nvars)
    return Ideal(R, [R.parse(t) for t in texts])


def cases() -> dict:
    return {
        "line": _ideal(4, "x2", "x3"),
        "twisted_cubic": _ideal(4, "x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"),
        "two_conic_ci": _ideal(3, "x0^2 - x1*x2", "x1^2 - x0*x2"),
        "giaimo4": giaimo_curve(4).ideal,
    }


def outputs(I: Ideal) -> dict[str, str]:
    H = hilbert_series(I)
    B = betti_numbers(I)
    return {
        "gb.txt": I.gb().render() + "\n",
        "hilbert.txt": f"numerator: {H.render_numerator()}\ndim: {H.krull_dim}\ndegree: {H.degree}\n",
        "betti.txt": B.render() + "\n",
        "betti.json": json.dumps(B.to_json(), sort_keys=True) + "\n",
    }


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, I in cases().items():
        for suffix, text in outputs(I).items():
            (GOLDEN / f"{name}.{suffix}").write_text(text)
