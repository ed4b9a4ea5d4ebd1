"""Smoke test for the pydahalab extension.

Build and run:
    cargo build -p dahalab-py --release --features extension-module
    cp target/release/libpydahalab.so python/pydahalab.so
    python3 python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pydahalab as d


def passed(suite):
    return suite["passes"] == suite["cases"]


def main():
    q, t = d.QT.q(), d.QT.t()
    assert str(q * t / t) == str(q)
    assert d.QT("(q^2 - t)/(1 + t)") * d.QT("1 + t") == q * q - t

    daha = d.Daha(2)
    assert passed(daha.verify_presentation(1))
    assert passed(daha.pbw_roundtrip(count=10, max_len=3, window=1))
    assert passed(daha.spherical())

    p = d.macdonald_poly([1, 0])
    assert [row["m"] for row in p] == ["1,0"], p
    assert passed(d.hc_commute(2))
    cmp = d.hc_compare(2, 2, degree=2)
    assert passed(cmp) and cmp["details"]["kappa"] == "1"

    pt = d.CMPoint.from_pair(["1", "2"], ["3", "-4"], "5")
    assert pt.moment_plus_is_zero() and pt.is_cyclic()
    assert pt.normal_form() == (["1", "2"], ["3", "-4"])
    assert d.CMPoint.from_json(pt.to_json()).to_json() == pt.to_json()
    moved = pt.act([[1, 1], [0, 1]])
    assert moved.moment_plus_is_zero()
    assert pt.fourier().fourier().to_json() == pt.to_json()
    assert pt.invariants(1)["invariants"] == moved.invariants(1)["invariants"]

    brackets, rs = d.poisson_brackets(2)
    assert passed(brackets) and passed(rs)

    a = d.QuadraticAlgebra("reflection_F", 2)
    assert a.hilbert_series(4) == [1, 4, 10, 20, 35]
    assert len(a.central_elements(2)) == 2

    assert passed(d.r_matrix_check(3))
    assert passed(d.uq_check("wt", 3, 1)) and passed(d.uq_check("torus", 3, 1))
    assert passed(d.center(2, 3, window=1))

    report = json.loads(d.run_cli(["rtt", "ybe", "--n", "2"]))
    assert report["version"] == d.__version__
    assert d.run_cli(["rtt", "dims", "--format", "csv"]).startswith("degree,dimension")

    try:
        d.CMPoint.from_pair(["1", "1"], ["1", "1"], "5")
    except RuntimeError:
        pass
    else:
        raise AssertionError("repeated h must be rejected")

    print("smoke test ok")


if __name__ == "__main__":
    main()
