"""Smoke test for the qdouble extension module.

Build and install it first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import qdouble


def main():
    f1 = qdouble.double_series("f1", 4)
    assert f1.coeffs() == [0, 1, 0, 1, 1], f1

    closed = qdouble.closed_form("thm-f1", 60)
    assert closed == qdouble.double_series("f1", 60)

    th = qdouble.theta(10)
    assert th == qdouble.lambert_theta(10)
    assert th.coeffs(0, 4) == [1, 2, 1, 2, 2]

    one_minus_q = qdouble.Series([1, -1], 8)
    geo = one_minus_q.invert()
    assert geo.coeffs() == [1] * 9
    assert (one_minus_q * geo).coeffs() == [1] + [0] * 8
    half = qdouble.Series([2], 5).invert()
    assert half.coeff(0) == Fraction(1, 2)
    assert qdouble.Series.monomial(1, -2, 3).valuation == -2

    euler = qdouble.poch(1, 1, 12)
    assert euler.coeffs() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    assert qdouble.poch(1, 1, 5, length=2).coeffs() == [1, -1, -1, 1, 0, 0]

    assert [qdouble.representation_count("g", n) for n in range(2, 7)] == [1, 0, 1, 1, 1]
    assert len(qdouble.enumerate_representations("g", 6)) == 3
    assert qdouble.f1_partition_scan(4) == 1

    ids = {r["id"] for r in qdouble.list_identities()}
    assert "thm-f1" in ids and "lambert-theta" in ids
    (report,) = qdouble.verify("thm-g", order=80)
    assert report["status"] == "PASS", report

    try:
        qdouble.Series([0], 4).invert()
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("inverting zero must fail")
    try:
        qdouble.double_series("h", 4)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown series must fail")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
