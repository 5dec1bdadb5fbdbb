"""Smoke test for the Python extension.

Builds the extension with cargo (unless ORBCHROM_LIB points at an existing
shared library), loads it, and checks a few known values against pure-Python
oracles.
"""

import importlib.util
import itertools
import json
import os
import pathlib
import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    lib = os.environ.get("ORBCHROM_LIB")
    if lib is None:
        subprocess.run(
            ["cargo", "build", "--release", "-p", "orbchrom-py", "--features", "extension-module"],
            cwd=ROOT,
            check=True,
        )
        lib = ROOT / "target" / "release" / "liborbchrom_py.so"
    target = pathlib.Path(tempfile.mkdtemp()) / "orbchrom.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("orbchrom", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def evaluate(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def colorings(n, edges, k):
    return sum(
        all(c[u] != c[v] for u, v in edges)
        for c in itertools.product(range(k), repeat=n)
    )


def orbit_count(n, edges, perms, k):
    seen, orbits = set(), 0
    for c in itertools.product(range(k), repeat=n):
        if c in seen or any(c[u] == c[v] for u, v in edges):
            continue
        orbits += 1
        for p in perms:
            image = [0] * n
            for v in range(n):
                image[p[v]] = c[v]
            seen.add(tuple(image))
    return orbits


def main():
    oc = load()

    c6 = oc.Graph.cycle(6)
    p = oc.chromatic(c6)
    assert p == [0, -5, 15, -20, 15, -6, 1], p
    for k in range(5):
        assert evaluate(p, k) == colorings(c6.n, c6.edges, k)

    antipode = [3, 4, 5, 0, 1, 2]
    num, den = oc.orbital_chromatic(c6, [antipode])
    for k in range(5):
        value = Fraction(evaluate(num, k), den)
        assert value == orbit_count(6, c6.edges, [list(range(6)), antipode], k)

    assert oc.quotient(c6, antipode) == oc.Graph.complete(3)

    exact, intervals = oc.real_roots(oc.chromatic(oc.Graph.cycle(5)))
    assert exact == [0, 1, 2] and intervals == [], (exact, intervals)

    exact, intervals = oc.real_roots([-2, 0, 1], Fraction(1, 1 << 20))
    assert exact == []
    assert [lo < hi for lo, hi in intervals] == [True, True]
    lo, hi = intervals[1]
    assert lo * lo < 2 <= hi * hi

    result = oc.forge(c6, [antipode], 4)
    assert (result["x0"], result["n"], result["s"]) == ("3/2", 1, 1)
    assert result["op_value_at_x0"] == "-159/8192"
    forged = oc.Graph.from_json(json.dumps(result["forged"]))
    assert forged.n == 12
    assert not oc.check_bound(forged, result["forged_group"]["generators"])["bound_holds"]

    assert oc.check_bound(c6)["bound_holds"]
    assert oc.Graph.cycle(7).is_outerplanar()
    assert not oc.Graph.complete(5).is_planar()
    report = oc.verify_outerplanar(oc.Graph.cycle(5))
    assert len(report["subgroups"]) == 8
    assert all(s["bound_holds"] for s in report["subgroups"])

    try:
        oc.forge(oc.Graph.cycle(5), [list(range(5))])
    except oc.PremiseError:
        pass
    else:
        raise AssertionError("expected a premise failure")
    try:
        oc.Graph(2, [(0, 5)])
    except oc.OrbchromError:
        pass
    else:
        raise AssertionError("expected an invalid graph")

    print("python smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
