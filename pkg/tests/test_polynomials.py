"""Exact polynomial arithmetic and root isolation."""

from fractions import Fraction

from hypertree_spectra import polynomials as poly


def test_dense_basics():
    p = [1, 0, -3, 2]  # 1 - 3x^2 + 2x^3
    assert poly.degree(p) == 3
    assert poly.evaluate(p, 2) == 1 - 12 + 16
    assert poly.add([1, 2], [0, -2, 5]) == [1, 0, 5]
    assert poly.sub([1, 2], [1, 2]) == []
    assert poly.mul([1, 1], [1, -1]) == [1, 0, -1]
    assert poly.mul_xpow([3, 1], 2) == [0, 0, 3, 1]
    assert poly.derivative([5, 1, 4]) == [1, 8]


def test_div_rem_exact():
    # (x^2 - 1) = (x + 1)(x - 1)
    quo, rem = poly.div_rem([-1, 0, 1], [1, 1])
    assert quo == [-1, 1]
    assert rem == []
    quo, rem = poly.div_rem([1, 0, 1], [1, 1])
    assert rem == [2]


def test_poly_gcd():
    # gcd((x-1)^2 (x+2), (x-1)(x+3)) = x - 1
    a = poly.mul(poly.mul([-1, 1], [-1, 1]), [2, 1])
    b = poly.mul([-1, 1], [3, 1])
    assert poly.poly_gcd(a, b) == [-1, 1]
    assert poly.poly_gcd([2, 2], [4]) == [1]


def test_count_real_roots():
    # x^2 - 3x + 1: roots (3 +- sqrt5)/2 ~ 0.382, 2.618
    p = [1, -3, 1]
    chain = poly.sturm_chain(p)
    assert poly.count_real_roots(chain, Fraction(0), Fraction(3)) == 2
    assert poly.count_real_roots(chain, Fraction(1), Fraction(3)) == 1
    assert poly.count_real_roots(chain, Fraction(3), Fraction(10)) == 0


def test_count_handles_multiple_roots():
    # (x - 1)^2 (x + 2): distinct roots 1 and -2
    p = poly.mul(poly.mul([-1, 1], [-1, 1]), [2, 1])
    chain = poly.sturm_chain(p)
    assert poly.count_real_roots(chain, Fraction(-3), Fraction(3)) == 2


def test_isolate_and_refine():
    p = [1, -3, 1]
    markers = poly.isolate_real_roots(p)
    assert len(markers) == 2
    top = markers[-1]
    assert top[0] == "interval"
    refined = poly.refine_isolating(p, top[1], top[2], Fraction(1, 10**12))
    if refined[0] == "interval":
        mid = float((refined[1] + refined[2]) / 2)
    else:
        mid = float(refined[1])
    assert abs(mid - (3 + 5**0.5) / 2) < 1e-10


def test_isolate_rational_roots_as_points():
    # x(x-2)(x-2): roots 0 and 2, one of them a double root
    p = poly.mul([0, 1], poly.mul([-2, 1], [-2, 1]))
    markers = poly.isolate_real_roots(p)
    values = []
    for mk in markers:
        if mk[0] == "point":
            values.append(mk[1])
        else:
            refined = poly.refine_isolating(p, mk[1], mk[2], Fraction(1, 10**9))
            values.append(refined[1])
    assert len(values) == 2
    assert min(abs(v - 0) for v in values) < Fraction(1, 10**8)
    assert min(abs(v - 2) for v in values) < Fraction(1, 10**8)


def test_largest_real_root_float():
    assert abs(poly.largest_real_root_float([1, -3, 1]) - (3 + 5**0.5) / 2) < 1e-12
    assert abs(poly.largest_real_root_float([-2, 1]) - 2.0) < 1e-15
    assert poly.largest_real_root_float([1]) is None
    # no real roots
    assert poly.largest_real_root_float([1, 0, 1]) is None


def test_pick_nonroot_avoids_roots():
    p = [0, 1]  # root at 0
    pt = poly.pick_nonroot([p], Fraction(-1), Fraction(1))
    assert poly.evaluate(p, pt) != 0
    assert Fraction(-1) < pt < Fraction(1)


def test_sparse_ops():
    a = poly.sp_monomial(4)  # x^4
    b = {2: -3, 0: 1}
    assert poly.sp_add(a, b) == {4: 1, 2: -3, 0: 1}
    assert poly.sp_sub(a, a) == {}
    assert poly.sp_mul({1: 1, 0: 1}, {1: 1, 0: -1}) == {2: 1, 0: -1}
    assert poly.sp_pow({1: 1, 0: -1}, 2) == {2: 1, 1: -2, 0: 1}
    assert poly.sp_equal({0: 0, 3: 2}, {3: 2})
