"""Special sextics, Salem certificates, and dynamical degrees.

A monic integer sextic p with p(0) = 1 is *special* when it is irreducible,
reciprocal, and its roots split into one conjugate pair on the unit circle,
one pair of modulus > 1, and one pair of modulus < 1, all nonreal.  That
root pattern is equivalent to a condition on the trace cubic q (where
p(t) = t^3 q(t + 1/t)): exactly one real root, lying in (-2, 2).  The other
two roots of q are then forced nonreal, which is what pushes the remaining
quartet of roots of p off both the circle and the real line.

The degree sequence of the induced torus automorphism is pure linear
algebra: the p-th dynamical degree is the spectral radius of the action on
the 2p-th exterior power, i.e. the product of the 2p largest eigenvalue
moduli.  Equalities between degrees are certified structurally: a window of
ranks multiplies to exactly 1 precisely when it splits into roots certified
on the unit circle and pairs of roots certified mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certroots import (
    CertValue,
    certify_value_match,
    isolate_roots,
)
from .exactlin import (
    IntMatrix,
    char_poly,
    companion,
    det,
    minimal_polynomial,
    wedge_power,
)
from .exceptions import (
    ClassificationRequired,
    EndpointIsRoot,
    InputError,
    NotUnimodular,
    OddDegreeRequested,
    PrecisionExhausted,
    ScanExhausted,
    VerificationFailed,
)
from .intpoly import (
    IntPoly,
    cauchy_bound,
    count_real_roots,
    factor_over_z,
    is_irreducible,
    real_root_enclosure,
    sturm_count,
)

_CONDITIONS = (
    "monic",
    "degree 6",
    "p(0)=1",
    "irreducible",
    "reciprocal",
    "trace-root pattern",
)


@dataclass(frozen=True)
class SpecialClassification:
    is_special: bool
    reasons: tuple  # ((condition, passed), ...) in _CONDITIONS order
    trace_poly: IntPoly | None
    real_trace_root_interval: tuple | None  # (lo, hi) Fractions
    subcase: str | None

    def failed(self):
        return [name for name, ok in self.reasons if not ok]


@dataclass(frozen=True)
class SalemCertificate:
    is_salem: bool
    trace_poly: IntPoly | None
    count_gt2: int | None
    count_in_m2_2: int | None
    lambda_: tuple | None  # (lo, hi) Fractions enclosing the root > 1


@dataclass(frozen=True)
class DegreeReport:
    lambdas: tuple  # (lo, hi) per p = 0..n
    exact_equalities: frozenset  # pairs (p, q), p < q, certified equal
    salem_first: bool


def classify_special(p: IntPoly) -> SpecialClassification:
    checks = {}
    checks["monic"] = p.degree >= 0 and p.is_monic()
    checks["degree 6"] = p.degree == 6
    checks["p(0)=1"] = (not p.is_zero()) and p[0] == 1
    checks["irreducible"] = p.degree >= 1 and is_irreducible(p)
    checks["reciprocal"] = p.degree >= 1 and p.is_reciprocal()

    q = None
    interval = None
    pattern = False
    if checks["monic"] and checks["degree 6"] and checks["reciprocal"]:
        q = p.trace_polynomial()
        try:
            pattern = count_real_roots(q) == 1 and sturm_count(q, -2, 2) == 1
        except EndpointIsRoot:
            # a trace root at +-2 means p(-+1) = 0, never irreducible
            pattern = False
        if pattern:
            interval = real_root_enclosure(q, -2, 2, Fraction(1, 1 << 32))
    checks["trace-root pattern"] = pattern

    special = all(checks[name] for name in _CONDITIONS)
    subcase = None
    if special:
        rs = isolate_roots(p, Fraction(1, 1 << 24))
        if rs.labeling != "special-canonical":
            raise VerificationFailed(
                "trace criterion and root isolation disagree on the root pattern"
            )
        # for the standard eigenvalue choice (indices 0, 2, 4) the small
        # root is the conjugate of the reciprocal of the big one
        subcase = "recip_equals_conj_on_big_pair"
    return SpecialClassification(
        is_special=special,
        reasons=tuple((name, checks[name]) for name in _CONDITIONS),
        trace_poly=q,
        real_trace_root_interval=interval,
        subcase=subcase,
    )


def is_salem(p: IntPoly) -> SalemCertificate:
    """Salem test: monic, reciprocal, irreducible, even degree 2k, and the
    trace polynomial has exactly one real root above 2 and k-1 in (-2,2).
    Degree 2 is accepted."""
    d = p.degree
    gates = (
        d >= 2
        and d % 2 == 0
        and p.is_monic()
        and p.is_reciprocal()
        and is_irreducible(p)
    )
    if not gates:
        return SalemCertificate(False, None, None, None, None)
    k = d // 2
    q = p.trace_polynomial()
    bound = cauchy_bound(q) + 1
    # q(2) = 0 would force p(1) = 0, impossible for irreducible p of
    # degree >= 2, so the endpoints are safe
    gt2 = sturm_count(q, 2, bound)
    inside = sturm_count(q, -2, 2)
    ok = gt2 == 1 and inside == k - 1
    lam = None
    if ok:
        big = cauchy_bound(p) + 1
        lam = real_root_enclosure(p, 1, big, Fraction(1, 1 << 64))
    return SalemCertificate(ok, q, gt2, inside, lam)


# ---------------------------------------------------------------------------
# Salem generator


def _comb(j: int) -> IntPoly:
    """Monic degree-j integer polynomial with j distinct real roots in
    (-2,2): products of distinct (t^2 - m), times t when j is odd."""
    t = IntPoly.parse("0,1")
    base = {
        0: IntPoly.parse("1"),
        2: IntPoly.parse("-2,0,1"),
        4: IntPoly.parse("-2,0,1") * IntPoly.parse("-3,0,1"),
        6: IntPoly.parse("-1,0,1") * IntPoly.parse("-2,0,1") * IntPoly.parse("-3,0,1"),
    }
    even = j - (j % 2)
    if even not in base:
        raise ScanExhausted(f"no interlacing comb of degree {j} is tabulated")
    c = base[even]
    if j % 2:
        c = c * t
    return c


def _salem_trace_pattern(r: IntPoly, k: int) -> bool:
    try:
        bound = cauchy_bound(r) + 1
        return sturm_count(r, -2, 2) == k - 1 and sturm_count(r, 2, bound) == 1
    except EndpointIsRoot:
        return False


def gross_mcmullen(two_k: int, a_max: int = 10000) -> IntPoly:
    """A Salem polynomial of each even degree, by perturbing an
    interlacing product: R(t) = comb * (edge factors) * (t - a) - 1 has
    k-1 roots in (-2,2) and one above 2 for suitable a, and lifting R as a
    trace polynomial gives the Salem polynomial."""
    if two_k % 2 != 0:
        raise OddDegreeRequested(str(two_k))
    if two_k < 2:
        raise InputError("degree must be at least 2")
    if two_k == 2:
        p = IntPoly.parse("1,-3,1")
        if not is_salem(p).is_salem:
            raise VerificationFailed("degree-2 table entry failed the Salem test")
        return p
    k = two_k // 2
    if k == 3:
        # the odd-k formula starts at k = 5; scan small trace cubics
        for s in range(1, 12):
            for c2 in range(-s, s + 1):
                for c1 in range(-s, s + 1):
                    for c0 in range(-s, s + 1):
                        if max(abs(c2), abs(c1), abs(c0)) != s:
                            continue
                        r = IntPoly((c0, c1, c2, 1))
                        if not _salem_trace_pattern(r, 3):
                            continue
                        p = IntPoly.from_trace(r)
                        if is_salem(p).is_salem:
                            return p
        raise ScanExhausted("no degree-6 Salem polynomial in the search box")
    t = IntPoly.parse("0,1")
    if k % 2 == 1:
        fixed = _comb(k - 3) * IntPoly.parse("-4,0,1")
    else:
        fixed = _comb(k - 2) * IntPoly.parse("-2,1")
    for a in range(3, a_max + 1):
        r = fixed * (t - a) - 1
        if not _salem_trace_pattern(r, k):
            continue
        p = IntPoly.from_trace(r)
        if is_salem(p).is_salem:
            return p
    raise ScanExhausted(f"no Salem polynomial of degree {two_k} with a <= {a_max}")


# ---------------------------------------------------------------------------
# eigenvalue bookkeeping for degree computations


class _Spectrum:
    """Eigenvalues of an integer matrix as refinable per-factor root
    systems; instances carry algebraic multiplicity."""

    def __init__(self, chi: IntPoly):
        self.fl = factor_over_z(chi)
        self.systems = []
        for f, _m in self.fl:
            self.systems.append(isolate_roots(f, Fraction(1, 1 << 24)))

    def instances(self):
        out = []
        for fi, (f, m) in enumerate(self.fl):
            for si in range(f.degree):
                for copy in range(m):
                    out.append((fi, si))
        return out

    def ball(self, fi, si):
        return self.systems[fi].roots[si]

    def is_eq1(self, fi, si):
        return self.systems[fi].modulus_class[si] == "eq1"

    def mod_class(self, fi, si):
        return self.systems[fi].modulus_class[si]

    def conj_slot(self, fi, si):
        return self.systems[fi].conj[si]

    def is_real(self, fi, si):
        return self.systems[fi].conj[si] == si

    def refine(self, fi):
        rs = self.systems[fi]
        self.systems[fi] = rs.refine(rs.eps / 16)

    def modsq_value(self, fi, si) -> CertValue:
        """Shrinkable disk for |root|^2 = root * conj(root)."""
        cj = self.conj_slot(fi, si)

        def refine_fn(target):
            while True:
                rs = self.systems[fi]
                b = rs.roots[si] * rs.roots[cj]
                if b.rad <= target:
                    return b
                self.refine(fi)

        rs = self.systems[fi]
        return CertValue(rs.roots[si] * rs.roots[cj], refine_fn, tag=(fi, si))

    def inverse_partner(self, fi, si):
        """(gi, sj) of the root equal to 1 / this root, or None.

        Within a self-reciprocal factor this is the recip involution; a
        cross-factor partner exists exactly when the other factor is the
        reversal of this one, and is then located by exact disk inversion.
        """
        f = self.fl.factors[fi][0]
        rs = self.systems[fi]
        if rs.recip is not None:
            return (fi, rs.recip[si])
        rev = f.reverse().primitive()
        if rev.lc < 0:
            rev = -rev
        for gi, (g, _m) in enumerate(self.fl):
            if gi == fi or g != rev:
                continue
            for _ in range(64):
                try:
                    img = self.systems[fi].roots[si].invert()
                except InputError:
                    self.refine(fi)
                    continue
                hits = [
                    sj
                    for sj in range(g.degree)
                    if not img.is_disjoint(self.systems[gi].roots[sj])
                ]
                if len(hits) == 1:
                    return (gi, hits[0])
                self.refine(fi)
                self.refine(gi)
            raise PrecisionExhausted("inverse pairing across factors stalled")
        return None


def _locate_value(value: CertValue, spectrum_like, rounds=80):
    """(factor_index, slot) of the unique root equal to the value, given
    that the value is a root of the factored polynomial."""
    fl, systems, refine = spectrum_like
    target = Fraction(1, 1 << 24)
    for _ in range(rounds):
        hits = []
        for fi, (f, _m) in enumerate(fl):
            for si in range(f.degree):
                if not value.ball.is_disjoint(systems[fi].roots[si]):
                    hits.append((fi, si))
        if not hits:
            raise VerificationFailed("value matches no root of the resolvent")
        if len(hits) == 1:
            return hits[0]
        target = target / 4
        value.shrink(target)
        for fi in {fi for fi, _ in hits}:
            refine(fi, target)
    raise PrecisionExhausted("value location did not stabilize")


def _factored_systems(poly: IntPoly):
    fl = factor_over_z(poly)
    systems = [isolate_roots(f, Fraction(1, 1 << 24)) for f, _m in fl]

    def refine(fi, target):
        systems[fi] = systems[fi].refine(target)

    return fl, systems, refine


def square_value_poly(f: IntPoly) -> IntPoly:
    """W with W(x^2) = +-f(x)f(-x); the roots of W are the squares of the
    roots of f."""
    h = f * f.negate_variable()
    for i in range(1, len(h.coeffs), 2):
        if h.coeffs[i] != 0:
            raise VerificationFailed("square resolvent is not even")
    w = IntPoly(tuple(h.coeffs[0::2]))
    if w.lc < 0:
        w = -w
    return w


def _min_poly_of_modsq(spec: _Spectrum, fi, si) -> IntPoly:
    """Exact minimal polynomial of |root|^2 for one spectrum slot."""
    f = spec.fl.factors[fi][0]
    v = spec.modsq_value(fi, si)
    if spec.is_real(fi, si):
        triple = _factored_systems(square_value_poly(f))
    else:
        triple = _factored_systems(minimal_polynomial(wedge_power(companion(f), 2)))
    loc = _locate_value(v, triple)
    return triple[0].factors[loc[0]][0]


def _equal_modsq(spec: _Spectrum, a, b) -> bool:
    """Exact decision |root_a| == |root_b| via minimal polynomials of the
    modulus squares and slot matching."""
    ma = _min_poly_of_modsq(spec, *a)
    mb = _min_poly_of_modsq(spec, *b)
    if ma != mb:
        return False
    triple = _factored_systems(ma)
    la = _locate_value(spec.modsq_value(*a), triple)
    lb = _locate_value(spec.modsq_value(*b), triple)
    return la == lb


def _cmp_moduli(spec: _Spectrum, a, b) -> int:
    """-1 / 0 / +1 comparing eigenvalue moduli, exact."""
    if a == b:
        return 0
    ca, cb = spec.mod_class(*a), spec.mod_class(*b)
    if ca == "eq1" and cb == "eq1":
        return 0
    if ca == "eq1":
        return 1 if cb == "lt1" else -1
    if cb == "eq1":
        return -1 if ca == "lt1" else 1
    if (a[0], spec.conj_slot(*a)) == b:
        return 0  # conjugate roots share modulus
    for round_ in range(48):
        lo_a, hi_a = spec.ball(*a).modulus_interval()
        lo_b, hi_b = spec.ball(*b).modulus_interval()
        if hi_a < lo_b:
            return -1
        if hi_b < lo_a:
            return 1
        if round_ == 6:
            if _equal_modsq(spec, a, b):
                return 0
        spec.refine(a[0])
        if b[0] != a[0]:
            spec.refine(b[0])
    raise PrecisionExhausted("modulus comparison did not stabilize")


def _sorted_instances(spec: _Spectrum):
    """Eigenvalue instances sorted by modulus, largest first, with an
    exact comparison; ties keep conjugate pairs adjacent."""
    from functools import cmp_to_key

    cache = {}

    def cmp_pair(x, y):
        if x == y:
            return 0
        key = (x, y)
        if key not in cache:
            c = _cmp_moduli(spec, x, y)
            cache[key] = c
            cache[(y, x)] = -c
        return cache[key]

    def full_cmp(x, y):
        c = cmp_pair(x, y)
        if c != 0:
            return c
        # deterministic tie order: real roots first, then by indices
        return -1 if x < y else 1

    return sorted(spec.instances(), key=cmp_to_key(full_cmp), reverse=True), cmp_pair


def _window_product_is_one(spec: _Spectrum, window) -> bool:
    """True when the multiset of ranks certifiedly multiplies (in
    modulus) to exactly 1: unit-circle roots plus mutually inverse pairs."""
    remaining = list(window)
    while remaining:
        inst = remaining.pop()
        if spec.is_eq1(*inst):
            continue
        partner = spec.inverse_partner(*inst)
        if partner is None:
            return False
        # the partner or its conjugate twin works; conjugates share modulus
        twin = (partner[0], spec.conj_slot(*partner))
        if partner in remaining:
            remaining.remove(partner)
        elif twin in remaining:
            remaining.remove(twin)
        else:
            return False
    return True


def _modulus_interval_tight(spec: _Spectrum, inst, eps: Fraction):
    if spec.is_eq1(*inst):
        return (Fraction(1), Fraction(1))
    for _ in range(64):
        lo, hi = spec.ball(*inst).modulus_interval()
        if lo > 0 and hi - lo <= eps:
            return (lo, hi)
        spec.refine(inst[0])
    raise PrecisionExhausted("modulus interval did not tighten")


def dynamical_degrees(A: IntMatrix, n: int) -> DegreeReport:
    """Certified dynamical degrees of the torus automorphism induced by A
    on a rank-2n lattice: lambda_p is the product of the 2p largest
    eigenvalue moduli of A."""
    if not A.is_square() or A.nrows != 2 * n:
        raise InputError(f"matrix must be {2 * n}x{2 * n} for dimension {n}")
    d = det(A)
    if abs(d) != 1:
        raise NotUnimodular(f"determinant {d}")
    chi = char_poly(A)
    spec = _Spectrum(chi)
    order, _cmp = _sorted_instances(spec)

    eps = Fraction(1, 1 << 48)
    lambdas = []
    for p in range(n + 1):
        if p == 0 or p == n:
            lambdas.append((Fraction(1), Fraction(1)))
            continue
        lo, hi = Fraction(1), Fraction(1)
        for inst in order[: 2 * p]:
            ilo, ihi = _modulus_interval_tight(spec, inst, eps)
            lo *= ilo
            hi *= ihi
        lambdas.append((lo, hi))

    equal = set()
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            window = order[2 * p : 2 * q]
            if _window_product_is_one(spec, window):
                equal.add((p, q))

    for p in range(1, n):
        if lambdas[p][1] ** 2 < lambdas[p - 1][0] * lambdas[p + 1][0]:
            raise VerificationFailed("interval bounds refute log-concavity")

    salem_first = _salem_first(spec, order)
    return DegreeReport(
        lambdas=tuple(lambdas),
        exact_equalities=frozenset(equal),
        salem_first=salem_first,
    )


def _salem_first(spec: _Spectrum, order) -> bool:
    """Whether the first dynamical degree (product of the top two moduli)
    is a Salem number, by pinning its exact minimal polynomial."""
    a, b = order[0], order[1]
    if spec.is_eq1(*a) and spec.is_eq1(*b):
        return False  # lambda_1 = 1
    if spec.is_eq1(*b):
        # lambda_1 = |root_a|
        if spec.is_real(*a):
            return is_salem(spec.fl.factors[a[0]][0]).is_salem
        m = _min_poly_of_modsq(spec, *a)
        # minimal polynomial of the modulus divides m(y^2)
        lifted = IntPoly(
            tuple(
                m.coeffs[i // 2] if i % 2 == 0 else 0
                for i in range(2 * len(m.coeffs) - 1)
            )
        )
        lo, hi = _modulus_interval_tight(spec, a, Fraction(1, 1 << 24))
        from .certroots import ComplexBall

        def refine_fn(target):
            lo2, hi2 = _modulus_interval_tight(spec, a, 2 * target)
            return ComplexBall((lo2 + hi2) / 2, Fraction(0), (hi2 - lo2) / 2)

        v = CertValue(
            ComplexBall((lo + hi) / 2, Fraction(0), (hi - lo) / 2), refine_fn
        )
        triple = _factored_systems(lifted)
        loc = _locate_value(v, triple)
        return is_salem(triple[0].factors[loc[0]][0]).is_salem
    # both top ranks off the circle
    if b == (a[0], spec.conj_slot(*a)) or (spec.is_real(*a) and a == b):
        m = _min_poly_of_modsq(spec, *a)
        return is_salem(m).is_salem
    if spec.is_real(*a) and spec.is_real(*b):
        # product of two real eigenvalues; take the modulus of the product
        sa = spec

        def refine_fn(target):
            while True:
                ball = sa.systems[a[0]].roots[a[1]] * sa.systems[b[0]].roots[b[1]]
                if ball.rad <= target:
                    return ball
                sa.refine(a[0])
                if b[0] != a[0]:
                    sa.refine(b[0])

        ball = sa.systems[a[0]].roots[a[1]] * sa.systems[b[0]].roots[b[1]]
        v = CertValue(ball, refine_fn)
        fa = spec.fl.factors[a[0]][0]
        fb = spec.fl.factors[b[0]][0]
        prod_poly = _real_pair_product_poly(fa, fb, a[0] == b[0])
        triple = _factored_systems(prod_poly)
        loc = _locate_value(v, triple)
        m = triple[0].factors[loc[0]][0]
        lo, _hi = v.ball.re - v.ball.rad, v.ball.re + v.ball.rad
        if lo < 0:
            m = m.negate_variable()
            if m.lc < 0:
                m = -m
        return is_salem(m).is_salem
    return False


def _real_pair_product_poly(fa: IntPoly, fb: IntPoly, same: bool) -> IntPoly:
    """A polynomial whose roots include all pairwise products of a root of
    fa and a root of fb (distinct slots when same factor)."""
    if same:
        return minimal_polynomial(wedge_power(companion(fa), 2))
    A = companion(fa)
    B = companion(fb)
    return minimal_polynomial(A.kron(B))


# ---------------------------------------------------------------------------
# first dynamical degree for sextic torus models


def first_dynamical_degree_salem(p: IntPoly) -> bool:
    """Whether the first dynamical degree of the 3-torus automorphism with
    analytic eigenvalue data from p is a Salem number: the exact minimal
    polynomial of alpha*conj(alpha), alpha a largest-modulus root, is
    matched out of the exterior-square factorization and tested."""
    cls = classify_special(p)
    if cls.is_special:
        rs = isolate_roots(p, Fraction(1, 1 << 24))
        box = [rs]

        def pair_value(i, j):
            def refine_fn(target):
                while True:
                    ball = box[0].roots[i] * box[0].roots[j]
                    if ball.rad <= target:
                        return ball
                    box[0] = box[0].refine(box[0].eps / 16)

            return CertValue(box[0].roots[i] * box[0].roots[j], refine_fn, tag=(i, j))

        resolvent = char_poly(wedge_power(companion(p), 2))
        fl = factor_over_z(resolvent)
        import itertools

        values = [pair_value(i, j) for i, j in itertools.combinations(range(6), 2)]
        match = certify_value_match(values, fl)
        # alpha = root 2 (modulus > 1, Im > 0), conj is root 5
        idx = list(itertools.combinations(range(6), 2)).index((2, 5))
        owner = fl.factors[match[idx][0]][0]
        return is_salem(owner).is_salem
    if p.degree == 6 and p.is_monic() and abs(p[0]) == 1 and not is_irreducible(p):
        spec = _Spectrum(p)
        order, _ = _sorted_instances(spec)
        top = order[0]
        f = spec.fl.factors[top[0]][0]
        if spec.is_real(*top):
            w = square_value_poly(f)
            fl = factor_over_z(w)
            rs_box = [spec.systems[top[0]]]

            def sq_value(si):
                def refine_fn(target):
                    while True:
                        ball = rs_box[0].roots[si] * rs_box[0].roots[si]
                        if ball.rad <= target:
                            return ball
                        rs_box[0] = rs_box[0].refine(rs_box[0].eps / 16)

                return CertValue(
                    rs_box[0].roots[si] * rs_box[0].roots[si], refine_fn, tag=si
                )

            values = [sq_value(si) for si in range(f.degree)]
            match = certify_value_match(values, fl)
            owner = fl.factors[match[top[1]][0]][0]
            return is_salem(owner).is_salem
        resolvent = char_poly(wedge_power(companion(f), 2))
        fl = factor_over_z(resolvent)
        rs_box = [spec.systems[top[0]]]

        def pv(i, j):
            def refine_fn(target):
                while True:
                    ball = rs_box[0].roots[i] * rs_box[0].roots[j]
                    if ball.rad <= target:
                        return ball
                    rs_box[0] = rs_box[0].refine(rs_box[0].eps / 16)

            return CertValue(rs_box[0].roots[i] * rs_box[0].roots[j], refine_fn)

        import itertools

        pairs = list(itertools.combinations(range(f.degree), 2))
        values = [pv(i, j) for i, j in pairs]
        match = certify_value_match(values, fl)
        idx = pairs.index(tuple(sorted((top[1], spec.conj_slot(*top)))))
        owner = fl.factors[match[idx][0]][0]
        return is_salem(owner).is_salem
    raise ClassificationRequired(
        "input must classify special or be a reducible monic unimodular sextic"
    )


# ---------------------------------------------------------------------------
# corpus enumeration


def enumerate_special(bound: int):
    """All special sextics lifted from trace cubics t^3 + c2 t^2 + c1 t +
    c0 with |ci| <= bound, in lexicographic coefficient order.  Yields
    (trace_cubic, sextic, classification)."""
    for c2 in range(-bound, bound + 1):
        for c1 in range(-bound, bound + 1):
            for c0 in range(-bound, bound + 1):
                q = IntPoly((c0, c1, c2, 1))
                try:
                    if count_real_roots(q) != 1 or sturm_count(q, -2, 2) != 1:
                        continue
                except EndpointIsRoot:
                    continue
                p = IntPoly.from_trace(q)
                cls = classify_special(p)
                if cls.is_special:
                    yield q, p, cls
