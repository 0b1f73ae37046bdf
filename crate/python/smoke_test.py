"""Smoke test for the dcomplete_py extension module.

Build it with `maturin develop -m crates/python/Cargo.toml`, or copy
target/<profile>/libdcomplete_py.so to dcomplete_py.so on PYTHONPATH.
"""

from fractions import Fraction

import dcomplete_py as dc


def main():
    d4 = dc.Poset.catalog("d4")
    assert len(d4) == 6 and d4.is_d_complete()
    assert d4.hook_lengths() == [1, 2, 3, 3, 4, 5]

    proctor = d4.verify_proctor()
    assert proctor == {"extensions": 2, "hook_product": 360, "factorial": 720, "ok": True}, proctor

    t = [2, 2, 3, 4, 2, 1]
    s = d4.rsk(t, order=[5, 4, 2, 3, 1, 0])
    assert s == [11, 9, 6, 7, 4, 3], s
    assert all(isinstance(v, Fraction) for v in s)
    assert d4.inverse_rsk(s) == t
    assert d4.diagonal_sums(s) == [14, 13, 6, 7]

    half = [Fraction(1, 2), "3/4", 0, 1, Fraction(5, 3), 2]
    assert d4.inverse_rsk(d4.rsk(half)) == [Fraction(v) for v in half]
    assert d4.is_stable(d4.stable_order())
    assert d4.verify_hlf(points=3, seed=1)

    # Round trip through the text format.
    again = dc.Poset.from_text(d4.to_text())
    assert again.covers == d4.covers

    # A diamond missing its top is not d-complete.
    v = dc.Poset(3, [(0, 1), (0, 2)])
    assert not v.is_d_complete() and v.violations()
    try:
        v.hook_lengths()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    try:
        d4.rsk([-1, 0, 0, 0, 0, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for a negative filling")

    m = [[1, 0, 2], [0, 2, 0], [1, 1, 0]]
    p, q = dc.classical_rsk(m)
    assert p == [[1, 1, 2, 2], [2, 3], [3]], p
    assert q == [[1, 1, 1, 3], [2, 2], [3]], q
    assert dc.toggle_rpp(m) == [[1, 2, 3], [1, 2, 3], [2, 4, 4]]

    assert len(dc.catalog_names()) == 296
    (cid, name, passed, detail), = dc.run_suite(seed=7, criterion=3)
    assert cid == 3 and passed, detail

    print("smoke test ok")


if __name__ == "__main__":
    main()
