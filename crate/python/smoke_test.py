#!/usr/bin/env python3
"""Build the extension module and exercise the bindings end to end."""

import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build():
    subprocess.run(
        ["cargo", "build", "-p", "koszul2-py", "--release", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    so = ROOT / "target" / "release" / "libkoszul2_py.so"
    dest = Path(__file__).resolve().parent / "koszul2_py.so"
    shutil.copy(so, dest)


def main():
    build()
    sys.path.insert(0, str(Path(__file__).resolve().parent))
    import koszul2_py as k

    lam = k.Partition([2, 1])
    assert lam.is_self_conjugate()
    assert lam.weight() == 3
    assert lam.frobenius_arms() == [1]
    assert str(lam) == "2,1"
    assert lam.schur_dim(2) == 2
    assert lam.schur_dim(3) == 8

    z1 = k.hook_cycle(1, 2)
    assert z1.is_cycle()
    assert not z1.is_boundary()
    assert z1.class_is_nonzero()
    assert z1.bidegree() == (1, 3)
    assert z1.differential().is_zero()

    zab = k.z_cycle([1, 2], [2], 2)
    assert str(zab.add(z1)) == "0", "z[1,2|2] should equal -Z_1"

    prod = k.z_product([0, 1], 2)
    assert prod.bidegree() == (1, 4)
    assert prod.class_is_nonzero()

    assert k.homology_dimension(2, 1, 3) == 2
    assert k.homology_dimension(2, 1, 4) == 1
    assert k.homology_dimension(2, 1, 5) == 0
    assert k.homology_dimension_multi(2, 1, [2, 1]) == 1

    preds = k.predicted_partitions(2, 1, 4)
    assert [p.parts() for p in preds] == [[2, 2]]

    rows = k.straighten([1, 3], [2], 3)
    rebuilt = None
    for a, b, coeff in rows:
        term = k.z_cycle(a, b, 3)
        assert coeff.lstrip("-").isdigit()
        if int(coeff) != 1:
            raise AssertionError("expected unit coefficients in this example")
        rebuilt = term if rebuilt is None else rebuilt.add(term)

    assert k.matching_homology(5, 1) == 6
    assert k.matching_homology(3, 0) == 2
    assert k.matching_torsion(7, 1) == [3]

    print("smoke test passed")


if __name__ == "__main__":
    main()
