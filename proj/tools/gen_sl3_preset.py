#!/usr/bin/env python3
"""Generate presets/sl3r_horocycle.json from the defining 3x3 matrices."""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

N = 3


def unit(i, j):
    m = [[Fraction(0)] * N for _ in range(N)]
    m[i][j] = Fraction(1)
    return m


def add(a, b, s=1):
    return [[a[i][j] + s * b[i][j] for j in range(N)] for i in range(N)]


def mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(N)) for j in range(N)] for i in range(N)]


def comm(a, b):
    return add(mul(a, b), mul(b, a), -1)


BASIS = [
    ("H1", add(unit(0, 0), unit(1, 1), -1)),
    ("H2", add(unit(1, 1), unit(2, 2), -1)),
    ("E12", unit(0, 1)),
    ("E13", unit(0, 2)),
    ("E23", unit(1, 2)),
    ("E21", unit(1, 0)),
    ("E31", unit(2, 0)),
    ("E32", unit(2, 1)),
]
NAMES = [n for n, _ in BASIS]
OFF_DIAG = {(0, 1): "E12", (0, 2): "E13", (1, 2): "E23", (1, 0): "E21", (2, 0): "E31", (2, 1): "E32"}


def coords(m):
    """Coordinates of a traceless matrix in BASIS."""
    assert sum(m[i][i] for i in range(N)) == 0
    out = {n: Fraction(0) for n in NAMES}
    out["H1"] = m[0][0]
    out["H2"] = m[0][0] + m[1][1]
    for (i, j), name in OFF_DIAG.items():
        out[name] = m[i][j]
    return out


def as_vector(c):
    return [c[n] for n in NAMES]


def from_coords(c):
    m = [[Fraction(0)] * N for _ in range(N)]
    for name, mat in BASIS:
        m = add(m, [[c[name] * x for x in row] for row in mat])
    return m


def text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sparse(c):
    return {n: text(v) for n, v in c.items() if v != 0}


def main():
    mats = dict(BASIS)
    for name, m in BASIS:
        assert from_coords(coords(m)) == m, name

    brackets = []
    for a, b in itertools.combinations(range(len(NAMES)), 2):
        c = coords(comm(BASIS[a][1], BASIS[b][1]))
        if any(c.values()):
            brackets.append({"pair": [NAMES[a], NAMES[b]], "value": sparse(c)})

    def br(x, y):
        return comm(x, y)

    for x, y, z in itertools.combinations(mats.values(), 3):
        s = add(add(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y))
        assert all(v == 0 for row in s for v in row), "Jacobi fails"

    def vec(**kw):
        return {k: text(Fraction(v)) for k, v in kw.items()}

    reps = []
    for signs, label in [((1, -1, -1), "Ad(diag(1,-1,-1))"), ((-1, 1, -1), "Ad(diag(-1,1,-1))"),
                         ((-1, -1, 1), "Ad(diag(-1,-1,1))")]:
        d = [[Fraction(signs[i]) if i == j else Fraction(0) for j in range(N)] for i in range(N)]
        columns = [as_vector(coords(mul(mul(d, m), d))) for _, m in BASIS]
        rows = [[text(columns[c][r]) for c in range(len(NAMES))] for r in range(len(NAMES))]
        reps.append({"name": label, "matrix": rows})

    preset = {
        "name": "sl3r_horocycle",
        "description": "Horocycle space of SL(3,R): h = m0 + n0 with m0 = 0, n0 = span{E12, E13, E23}; "
                       "m = a + k0 = span{H1, H2, E12-E21, E13-E31, E23-E32}, chi = 0. The component "
                       "representatives are Ad of the diagonal sign matrices in M.",
        "reference": "horocycle space G/MN",
        "basis": NAMES,
        "brackets": brackets,
        "subspaces": {
            "h": [{"name": n, "vector": vec(**{n: 1})} for n in ("E12", "E13", "E23")],
            "m": [
                {"name": "H1", "vector": vec(H1=1)},
                {"name": "H2", "vector": vec(H2=1)},
                {"name": "K12", "vector": vec(E12=1, E21=-1)},
                {"name": "K13", "vector": vec(E13=1, E31=-1)},
                {"name": "K23", "vector": vec(E23=1, E32=-1)},
            ],
            "a": [{"name": "H1", "vector": vec(H1=1)}, {"name": "H2", "vector": vec(H2=1)}],
            "n": [{"name": n, "vector": vec(**{n: 1})} for n in ("E12", "E13", "E23")],
            "k0": [
                {"name": "K12", "vector": vec(E12=1, E21=-1)},
                {"name": "K13", "vector": vec(E13=1, E31=-1)},
                {"name": "K23", "vector": vec(E23=1, E32=-1)},
            ],
        },
        "chi": {"E12": "0", "E13": "0", "E23": "0"},
        "component_reps": reps,
    }
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "presets" / "sl3r_horocycle.json"
    out.write_text(json.dumps(preset, indent=2) + "\n")


if __name__ == "__main__":
    main()
