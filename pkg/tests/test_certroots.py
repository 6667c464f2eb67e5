import itertools
import random
from collections import Counter
from fractions import Fraction

import mpmath
import pytest

from salemtori.certroots import (
    CertValue,
    ComplexBall,
    certify_value_match,
    evaluate_poly_on_ball,
    expand_ball_poly,
    isolate_roots,
    pin_integer_coeffs,
)
from salemtori.exactlin import char_poly, companion, wedge_power
from salemtori.exceptions import (
    Ambiguous,
    InputError,
    NotSquarefree,
    VerificationFailed,
)
from salemtori.intpoly import IntPoly, factor_over_z, is_squarefree

P1 = IntPoly.parse("1,3,5,5,5,3,1")
CUBIC = IntPoly.parse("-1,-1,0,1")  # t^3 - t - 1
EPS = Fraction(1, 1 << 20)


def mp_roots(p, dps=40):
    with mpmath.workdps(dps):
        return mpmath.polyroots(
            [p.coeffs[-1 - i] for i in range(p.degree + 1)], maxsteps=200, extraprec=80
        )


def frac(mpf):
    # decimal string round-trip is plenty below ball radii used here
    return Fraction(mpmath.nstr(mpf, 30, strip_zeros=False))


# ---- ComplexBall arithmetic ----


def test_ball_mul_contains_products():
    rng = random.Random(1201)
    for _ in range(200):
        def rnd_ball():
            c = ComplexBall(
                Fraction(rng.randint(-40, 40), rng.randint(1, 9)),
                Fraction(rng.randint(-40, 40), rng.randint(1, 9)),
                Fraction(rng.randint(0, 5), 7),
            )
            return c

        def rnd_point(b):
            # random rational point inside: center + t*(r/2, s*r/2) scaled into disk
            t = Fraction(rng.randint(-10, 10), 21)
            s = Fraction(rng.randint(-10, 10), 21)
            return (b.re + t * b.rad, b.im + s * b.rad)

        b1, b2 = rnd_ball(), rnd_ball()
        (x1, y1), (x2, y2) = rnd_point(b1), rnd_point(b2)
        prod = b1 * b2
        pr = x1 * x2 - y1 * y2
        pi = x1 * y2 + y1 * x2
        assert prod.contains_point(pr, pi)
        s = b1 + b2
        assert s.contains_point(x1 + x2, y1 + y2)
        d = b1 - b2
        assert d.contains_point(x1 - x2, y1 - y2)


def test_ball_invert_exact_image():
    rng = random.Random(1202)
    for _ in range(200):
        b = ComplexBall(
            Fraction(rng.randint(2, 50), rng.randint(1, 5)),
            Fraction(rng.randint(-50, 50), rng.randint(1, 5)),
            Fraction(1, rng.randint(2, 20)),
        )
        if not b.excludes_zero():
            continue
        inv = b.invert()
        for _ in range(5):
            t = Fraction(rng.randint(-10, 10), 11)
            s = Fraction(rng.randint(-10, 10), 11)
            x = b.re + t * b.rad / 2
            y = b.im + s * b.rad / 2
            den = x * x + y * y
            assert inv.contains_point(x / den, -y / den)
        # double inversion returns to a disk containing the original center
        assert inv.invert().contains_point(b.re, b.im)


def test_ball_invert_rejects_zero_disk():
    with pytest.raises(InputError):
        ComplexBall(Fraction(1, 2), Fraction(0), Fraction(1)).invert()


def test_modulus_interval_bounds():
    b = ComplexBall(Fraction(3), Fraction(4), Fraction(1, 10))
    lo, hi = b.modulus_interval()
    assert lo <= 5 <= hi
    assert hi - lo <= Fraction(1, 5) + Fraction(1, 100)


def test_poly_on_ball_contains_value():
    rng = random.Random(1203)
    p = IntPoly.parse("2,-3,0,1")
    for _ in range(100):
        b = ComplexBall(
            Fraction(rng.randint(-9, 9), 4),
            Fraction(rng.randint(-9, 9), 4),
            Fraction(1, rng.randint(3, 30)),
        )
        x = b.re + b.rad / 3
        y = b.im - b.rad / 5
        vr = x * (x * x - 3 * y * y) - 3 * x + 2
        vi = y * (3 * x * x - y * y) - 3 * y
        assert evaluate_poly_on_ball(p, b).contains_point(vr, vi)


# ---- isolation on reference inputs ----


def test_gaussian_units():
    rs = isolate_roots(IntPoly.parse("1,0,1"), Fraction(1, 10**6))
    assert len(rs.roots) == 2
    assert rs.modulus_class == ("eq1", "eq1")
    assert rs.conj == (1, 0)
    assert rs.recip == (1, 0)
    assert rs.roots[0].contains_point(0, 1) or rs.roots[0].contains_point(0, -1)
    assert rs.roots[0].im * rs.roots[1].im < 0


def test_sextic_canonical_labels():
    rs = isolate_roots(P1, Fraction(1, 10**8))
    assert rs.labeling == "special-canonical"
    assert rs.modulus_class == ("eq1", "eq1", "gt1", "lt1", "lt1", "gt1")
    assert rs.conj == (1, 0, 5, 4, 3, 2)
    assert rs.recip == (1, 0, 3, 2, 5, 4)
    assert rs.roots[0].im > 0 and rs.roots[2].im > 0 and rs.roots[4].im > 0
    assert rs.roots[1].im < 0 and rs.roots[3].im < 0 and rs.roots[5].im < 0


def test_sextic_roots_against_float_solver():
    rs = isolate_roots(P1, Fraction(1, 10**10))
    approx = mp_roots(P1)
    # every float root falls in exactly one disk
    used = set()
    for z in approx:
        hits = [
            i
            for i, b in enumerate(rs.roots)
            if b.contains_point(frac(mpmath.re(z)), frac(mpmath.im(z)))
        ]
        assert len(hits) == 1
        used.add(hits[0])
    assert used == set(range(6))


def test_cubic_real_root():
    rs = isolate_roots(CUBIC, Fraction(1, 10**6))
    assert rs.recip is None
    reals = [i for i in range(3) if rs.conj[i] == i]
    assert len(reals) == 1
    r = reals[0]
    assert rs.roots[r].contains_point(Fraction("1.3247179572447460259609088545"))
    assert rs.modulus_class[r] == "gt1"
    others = [i for i in range(3) if i != r]
    assert rs.conj[others[0]] == others[1]
    assert all(rs.modulus_class[i] == "lt1" for i in others)


def test_unit_roots_without_reciprocal_input():
    # (t - 2)(t^2 + 1): the circle pair is certified eq1 even though the
    # polynomial as a whole is not self-reciprocal
    p = IntPoly.parse("-2,1,-2,1")
    rs = isolate_roots(p, Fraction(1, 10**6))
    assert rs.recip is None
    assert sorted(rs.modulus_class) == ["eq1", "eq1", "gt1"]
    big = rs.modulus_class.index("gt1")
    assert rs.roots[big].contains_point(2)


def test_real_unit_roots():
    rs = isolate_roots(IntPoly.parse("-1,0,1"), Fraction(1, 10**6))
    assert rs.modulus_class == ("eq1", "eq1")
    assert rs.conj == (0, 1)
    assert rs.recip == (0, 1)


def test_root_at_zero():
    rs = isolate_roots(IntPoly.parse("0,-1,1"), Fraction(1, 64))
    classes = sorted(rs.modulus_class)
    assert classes == ["eq1", "lt1"]


def test_salem_quartic_classes():
    # real pair lambda, 1/lambda plus a conjugate unit pair
    p = IntPoly.parse("1,-5,7,-5,1")
    rs = isolate_roots(p, Fraction(1, 10**6))
    assert rs.recip is not None
    assert sorted(rs.modulus_class) == ["eq1", "eq1", "gt1", "lt1"]
    for i in range(4):
        if rs.modulus_class[i] == "gt1":
            assert rs.conj[i] == i
            assert rs.modulus_class[rs.recip[i]] == "lt1"
        if rs.modulus_class[i] == "eq1":
            assert rs.recip[i] == rs.conj[i]


def test_rejects_non_squarefree():
    with pytest.raises(NotSquarefree):
        isolate_roots(IntPoly.parse("1,2,1"), EPS)


def test_rejects_constant_and_bad_eps():
    with pytest.raises(InputError):
        isolate_roots(IntPoly.parse("5"), EPS)
    with pytest.raises(InputError):
        isolate_roots(P1, 0)


# ---- invariants ----


def test_sum_and_product_enclosures():
    for p in (P1, CUBIC, IntPoly.parse("1,-5,13,-11,13,-5,1")):
        rs = isolate_roots(p, Fraction(1, 10**8))
        n = p.degree
        csum = ComplexBall.exact(0)
        cprod = ComplexBall.exact(1)
        for b in rs.roots:
            csum = csum + b
            cprod = cprod * b
        assert csum.contains_point(Fraction(-p[n - 1], p.lc))
        assert cprod.contains_point(Fraction((-1) ** n * p[0], p.lc))


def test_involutions_commute():
    for text in ("1,3,5,5,5,3,1", "1,-5,13,-11,13,-5,1", "1,-5,7,-5,1"):
        rs = isolate_roots(IntPoly.parse(text), Fraction(1, 10**6))
        n = len(rs.roots)
        for i in range(n):
            assert rs.conj[rs.conj[i]] == i
            assert rs.recip[rs.recip[i]] == i
            assert rs.conj[rs.recip[i]] == rs.recip[rs.conj[i]]


def test_refine_preserves_structure():
    rs = isolate_roots(P1, EPS)
    fine = rs.refine(EPS / 1024)
    assert fine.conj == rs.conj
    assert fine.recip == rs.recip
    assert fine.modulus_class == rs.modulus_class
    for i in range(6):
        assert rs.roots[i].contains_ball(fine.roots[i])
        assert fine.roots[i].rad <= EPS / 1024


def test_monotone_refinement_random_sextics():
    rng = random.Random(424242)
    done = 0
    while done < 100:
        coeffs = [rng.randint(-6, 6) for _ in range(6)] + [1]
        p = IntPoly(tuple(coeffs))
        if p.degree != 6 or not is_squarefree(p):
            continue
        eps = Fraction(1, 1 << 30)
        rs1 = isolate_roots(p, eps)
        rs2 = isolate_roots(p, eps / 2)
        matched = 0
        for b2 in rs2.roots:
            hits = [b1 for b1 in rs1.roots if b1.contains_ball(b2)]
            assert len(hits) == 1
            matched += 1
        assert matched == 6
        done += 1


# ---- value matching ----


def wedge2_factors():
    return factor_over_z(char_poly(wedge_power(companion(P1), 2)))


def pair_product_values(rs_box):
    def mk(i, j):
        def refine_fn(target):
            while True:
                b = rs_box[0].roots[i] * rs_box[0].roots[j]
                if b.rad <= target:
                    return b
                rs_box[0] = rs_box[0].refine(rs_box[0].eps / 16)

        return CertValue(rs_box[0].roots[i] * rs_box[0].roots[j], refine_fn, tag=(i, j))

    return [mk(i, j) for i, j in itertools.combinations(range(6), 2)]


def test_value_match_pair_products():
    fl = wedge2_factors()
    assert fl.degrees() == [1, 1, 1, 3, 3, 6]
    box = [isolate_roots(P1, Fraction(1, 1 << 24))]
    values = pair_product_values(box)
    match = certify_value_match(values, fl)
    per_factor = Counter(fi for fi, _ in match)
    for fi, (f, mult) in enumerate(fl):
        assert per_factor[fi] == f.degree * mult
    # products over the reciprocal pairs are exactly 1, the rational slot
    lin = [fi for fi, (f, m) in enumerate(fl) if f.degree == 1][0]
    ones = {
        values[k].tag
        for k, (fi, _si) in enumerate(match)
        if fi == lin
    }
    assert ones == {(0, 1), (2, 3), (4, 5)}


def test_value_match_rational_slot_capacity():
    # (t-1)^2 (t-3): two values equal to 1, one equal to 3
    fl = factor_over_z(IntPoly.parse("-1,1") ** 2 * IntPoly.parse("-3,1"))
    values = [
        ComplexBall.exact(1),
        ComplexBall.exact(1),
        ComplexBall.exact(3),
    ]
    match = certify_value_match(values, fl)
    assert match[0] == match[1]
    assert match[2] != match[0]


def test_value_match_detects_alien_value():
    fl = factor_over_z(IntPoly.parse("2,-3,1"))  # (t-1)(t-2)
    with pytest.raises(VerificationFailed):
        certify_value_match([ComplexBall.exact(1), ComplexBall.exact(5)], fl)


def test_value_match_ambiguous_without_refinement():
    fl = factor_over_z(IntPoly.parse("2,-3,1"))
    wide = ComplexBall(Fraction(3, 2), Fraction(0), Fraction(2))
    with pytest.raises(Ambiguous):
        certify_value_match([wide, ComplexBall.exact(2)], fl)


def test_value_match_wrong_count():
    fl = factor_over_z(IntPoly.parse("2,-3,1"))
    with pytest.raises(VerificationFailed):
        certify_value_match([ComplexBall.exact(1)], fl)


# ---- integer pinning ----


def test_pin_roundtrip_from_roots():
    rs = isolate_roots(P1, Fraction(1, 1 << 40))
    status = pin_integer_coeffs(expand_ball_poly(list(rs.roots)))
    assert status == ("ok", P1)


def test_pin_rejects_irrational():
    rs = isolate_roots(IntPoly.parse("-2,0,1"), Fraction(1, 1 << 30))
    # single root ball around sqrt(2): t - sqrt(2) has no integer constant
    ball = next(b for b in rs.roots if b.re > 0)
    status = pin_integer_coeffs(expand_ball_poly([ball]))
    assert status[0] == "none"


def test_pin_wide_ball():
    wide = ComplexBall(Fraction(1, 2), Fraction(0), Fraction(3, 4))
    assert pin_integer_coeffs([wide])[0] == "wide"
    huge = ComplexBall(Fraction(0), Fraction(0), Fraction(5))
    assert pin_integer_coeffs([huge])[0] == "wide"
