"""Galois class of a special sextic from exact resolvent data.

The roots of a special sextic fall into three reciprocal pairs, so the
Galois group embeds in the order-48 group W of permutations of the six
root labels preserving that pairing.  Under the canonical labeling the
group always contains complex conjugation, and the quotient action on
the pairs is the full S3 (the trace cubic is irreducible with exactly
one real root, never a cyclic cubic).  Five subgroup classes of W can
occur; they are told apart here by exact integer computations only:

  * the partition of the 15 pair products into Galois orbits, read off
    the factorization of the exterior-square characteristic polynomial
    (shifted by c*(sum of the pair) when product values collide);
  * the factor degrees of the ordered-triple resolvent, whose 48 points
    carry a free W-action, so every irreducible factor has degree |G|;
  * perfect-square tests on discriminants.  W has exactly three index-2
    subgroups, kernels of the linear characters sign6, sign3, and
    sign6*sign3 (sign6 on the six roots, sign3 on the three pairs), and
    membership of G in each kernel is equivalent to the corresponding
    product of discriminants being a rational square.

All resolvents are certified: factor assignments go through disk
matching against isolated roots, never through floating-point guesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .certroots import (
    CertValue,
    ComplexBall,
    certify_value_match,
    expand_ball_poly,
    isolate_roots,
    pin_integer_coeffs,
)
from .exactlin import additive_compound2, char_poly, companion, wedge_power
from .exceptions import (
    CollisionUnresolved,
    NoCandidateMatches,
    NotSpecial,
    PrecisionExhausted,
    VerificationFailed,
)
from .intpoly import IntPoly, discriminant, factor_over_z, is_squarefree
from .salem import classify_special

# root labels: (0,1) unit pair, (2,3) and (4,5) the off-circle pairs
PAIRS = ((0, 1), (2, 3), (4, 5))
_PAIR_OF = (0, 0, 1, 1, 2, 2)
IDENTITY = (0, 1, 2, 3, 4, 5)
CONJUGATION = (1, 0, 5, 4, 3, 2)

ALL_PAIRS = tuple(itertools.combinations(range(6), 2))
RECIPROCAL_BLOCK = frozenset(PAIRS)
# one root from each pair, unordered / ordered
OCTET_TRIPLES = tuple(
    t
    for t in itertools.combinations(range(6), 3)
    if len({_PAIR_OF[i] for i in t}) == 3
)
ORDERED_TRIPLES = tuple(
    t
    for t in itertools.permutations(range(6), 3)
    if len({_PAIR_OF[i] for i in t}) == 3
)


def _compose(a, b):
    return tuple(a[b[i]] for i in range(6))


def _inverse(a):
    out = [0] * 6
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _closure(gens):
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _orbits(elements, points, act):
    left = set(points)
    out = []
    while left:
        seed = min(left)
        orb = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for w in elements:
                    y = act(w, x)
                    if y not in orb:
                        orb.add(y)
                        nxt.append(y)
            frontier = nxt
        left -= orb
        out.append(frozenset(orb))
    return tuple(sorted(out, key=lambda o: (len(o), min(o))))


def _act_pair(w, pr):
    a, b = w[pr[0]], w[pr[1]]
    return (a, b) if a < b else (b, a)


def _act_triple(w, t):
    return tuple(sorted(w[i] for i in t))


def _act_ordered(w, t):
    return tuple(w[i] for i in t)


def _sigma(w):
    return tuple(_PAIR_OF[w[2 * k]] for k in range(3))


def _sign3(s):
    return -1 if sum(1 for i in range(3) for j in range(i + 1, 3) if s[i] > s[j]) % 2 else 1


def _sign6(w):
    # equals the product of the signs in the signed-permutation picture
    out = 1
    for k in range(3):
        if w[2 * k] % 2:
            out = -out
    return out


def wreath_group():
    """All 48 permutations of the six labels preserving the pairing."""
    return _closure(((1, 0, 2, 3, 4, 5), (2, 3, 0, 1, 4, 5), (2, 3, 4, 5, 0, 1)))


def _minimal_generators(elements):
    gens = []
    sub = frozenset((IDENTITY,))
    for g in sorted(elements):
        if g not in sub:
            gens.append(g)
            sub = _closure(gens)
            if sub == elements:
                break
    return tuple(gens)


@dataclass(frozen=True)
class CandidateGroup:
    label: str
    generators: tuple
    order: int
    elements: frozenset
    pair_orbit_sizes: tuple  # predicted orbit sizes on the 15 pairs
    octet_orbit_sizes: tuple  # predicted orbit sizes on the 8 one-per-pair triples
    ordered_triple_orbit_sizes: tuple  # predicted on the 48 ordered triples
    contains_conjugation: bool
    sign_product_square: bool  # group lies in ker(sign6 * sign3)


def _predicted(label, elements):
    return CandidateGroup(
        label=label,
        generators=_minimal_generators(elements),
        order=len(elements),
        elements=elements,
        pair_orbit_sizes=tuple(
            sorted(len(o) for o in _orbits(elements, ALL_PAIRS, _act_pair))
        ),
        octet_orbit_sizes=tuple(
            sorted(len(o) for o in _orbits(elements, OCTET_TRIPLES, _act_triple))
        ),
        ordered_triple_orbit_sizes=tuple(
            sorted(len(o) for o in _orbits(elements, ORDERED_TRIPLES, _act_ordered))
        ),
        contains_conjugation=CONJUGATION in elements,
        sign_product_square=all(
            _sign6(w) * _sign3(_sigma(w)) == 1 for w in elements
        ),
    )


def _index_two_subgroups(w_elements):
    """Kernels of the three surjections W -> C2, found from the derived
    subgroup rather than hard-coded."""
    derived = set()
    elems = sorted(w_elements)
    for a in elems:
        ai = _inverse(a)
        for b in elems:
            derived.add(_compose(_compose(a, b), _compose(ai, _inverse(b))))
    d = _closure(_minimal_generators(frozenset(derived)) or (IDENTITY,))
    # quotient W/D is elementary abelian of order 4: three index-2 kernels
    cosets = {}
    for g in elems:
        key = min(_compose(g, h) for h in d)
        cosets.setdefault(key, []).append(g)
    keys = sorted(cosets)
    out = []
    for k in keys:
        if k == min(cosets[keys[0]]) and IDENTITY in cosets[k]:
            continue
        candidate = frozenset(cosets[keys[0]]) | frozenset(cosets[k])
        if len(candidate) == len(w_elements) // 2:
            g2 = _closure(_minimal_generators(candidate))
            if g2 == candidate:
                out.append(candidate)
    return out


_CANDIDATES = None


def candidate_groups():
    """The five possible Galois classes inside the pairing-preserving
    group W, with predicted orbit data.

    H6 and G12 come from explicit generators.  The order-24 classes are
    derived by search: W has exactly three index-2 subgroups; one fails
    to surject onto S3 and is discarded, and the remaining two are told
    apart by whether they contain complex conjugation (H24 does, G24
    does not, so G24 never occurs for an actual special sextic).
    """
    global _CANDIDATES
    if _CANDIDATES is not None:
        return _CANDIDATES
    w = wreath_group()
    if len(w) != 48:
        raise VerificationFailed("pairing-preserving group has wrong order")

    three_cycle = (2, 3, 4, 5, 0, 1)  # both off-circle pairs rotated onto the next
    straight_swap = (2, 3, 0, 1, 4, 5)
    full_flip = (1, 0, 3, 2, 5, 4)
    h6 = _closure((three_cycle, CONJUGATION))
    g12 = _closure((three_cycle, straight_swap, full_flip))

    order24 = [h for h in _index_two_subgroups(w) if len(h) == 24]
    if len(order24) != 3:
        raise VerificationFailed("expected exactly three index-2 subgroups")
    onto = [
        h for h in order24 if len({_sigma(x) for x in h}) == 6
    ]
    if len(onto) != 2:
        raise VerificationFailed("expected two order-24 classes surjecting onto S3")
    with_conj = [h for h in onto if CONJUGATION in h]
    without = [h for h in onto if CONJUGATION not in h]
    if len(with_conj) != 1 or len(without) != 1:
        raise VerificationFailed("conjugation does not separate the order-24 classes")

    groups = (
        _predicted("H6", h6),
        _predicted("G12", g12),
        _predicted("G24", without[0]),
        _predicted("H24", with_conj[0]),
        _predicted("G48", w),
    )
    for g in groups:
        if len({_act_pair(x, (0, 1)) for x in g.elements} | {
            (min(x[0], x[1]), max(x[0], x[1])) for x in g.elements
        }) == 0:
            raise VerificationFailed("empty orbit")  # unreachable guard
        orbit0 = {w_[0] for w_ in g.elements}
        if len(orbit0) != 6:
            raise VerificationFailed(f"candidate {g.label} is not transitive")
    _CANDIDATES = groups
    return groups


@dataclass(frozen=True)
class GaloisReport:
    class_label: str
    order: int
    pair_orbits: tuple  # frozensets of index pairs, sorted by (size, min)
    evidence: tuple  # ((resolvent name, data), ...)


def _perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _root_box(p: IntPoly, precision_bits: int = 128):
    return [isolate_roots(p, Fraction(1, 1 << max(24, precision_bits)))]


def _pair_value(box, i, j, c):
    def current():
        r = box[0].roots
        b = r[i] * r[j]
        if c:
            b = b + (r[i] + r[j]) * ComplexBall.exact(c)
        return b

    def refine_fn(target):
        while True:
            b = current()
            if b.rad <= target:
                return b
            box[0] = box[0].refine(box[0].eps / 16)

    return CertValue(current(), refine_fn, tag=(i, j))


def _partition_from_match(match):
    groups = {}
    for k, (fi, _slot) in enumerate(match):
        groups.setdefault(fi, []).append(ALL_PAIRS[k])
    out = [frozenset(v) for v in groups.values()]
    return tuple(sorted(out, key=lambda o: (len(o), min(o))))


def _pair_orbit_data(p: IntPoly, box, c_max: int):
    """Exact orbit partition of the 15 pairs plus the resolvent used.

    The plain exterior square is conclusive when the only repeated
    factor is (t-1)^3 from the three reciprocal pairs.  Any other
    repetition means two orbits share a value set, and the products are
    re-separated by adding c times the pair sum.
    """
    a = companion(p)
    w2 = wedge_power(a, 2)
    one = IntPoly.parse("-1,1")
    fl0 = factor_over_z(char_poly(w2))
    conclusive = all(
        (m == 3 and f == one) or (m == 1 and f != one) for f, m in fl0
    )
    if conclusive:
        values = [_pair_value(box, i, j, 0) for i, j in ALL_PAIRS]
        match = certify_value_match(values, fl0)
        return _partition_from_match(match), ("pair-products", 0)
    addc = additive_compound2(a)
    for c in range(1, c_max + 1):
        resolvent = char_poly(w2 + addc * c)
        if not is_squarefree(resolvent):
            continue
        fl = factor_over_z(resolvent)
        values = [_pair_value(box, i, j, c) for i, j in ALL_PAIRS]
        match = certify_value_match(values, fl)
        return _partition_from_match(match), ("shifted pair-products", c)
    raise CollisionUnresolved(f"no shift c <= {c_max} separates the pair values")


def pair_orbit_partition(p: IntPoly, c_max: int = 100, precision_bits: int = 128):
    """Galois orbit partition of the 15 unordered root-index pairs."""
    cls = classify_special(p)
    if not cls.is_special:
        raise NotSpecial(p.format())
    partition, _used = _pair_orbit_data(p, _root_box(p, precision_bits), c_max)
    return partition


def octet_data(p: IntPoly, box=None):
    """(T8, triples, owners): the degree-8 resolvent of one-per-pair
    triple products, the 8 triples, and the irreducible factor owning
    each triple's product.  A triple owns (t-1) exactly when its
    product is certified to be 1."""
    a = companion(p)
    w3 = char_poly(wedge_power(a, 3))
    p2 = p * p
    t8 = w3.div_exact(p2)
    if t8.degree != 8:
        raise VerificationFailed("cube resolvent did not split off the square")
    if box is None:
        box = _root_box(p)

    def value(t):
        def current():
            r = box[0].roots
            return r[t[0]] * r[t[1]] * r[t[2]]

        def refine_fn(target):
            while True:
                b = current()
                if b.rad <= target:
                    return b
                box[0] = box[0].refine(box[0].eps / 16)

        return CertValue(current(), refine_fn, tag=t)

    fl = factor_over_z(t8)
    match = certify_value_match([value(t) for t in OCTET_TRIPLES], fl)
    owners = tuple(fl.factors[fi][0] for fi, _slot in match)
    return t8, OCTET_TRIPLES, owners


def _theta_balls(box, s):
    s1 = ComplexBall.exact(s)
    s2 = ComplexBall.exact(s * s)
    r = box[0].roots
    return [r[a] + r[b] * s1 + r[c] * s2 for a, b, c in ORDERED_TRIPLES]


def _triple_resolvent(p: IntPoly, box, s_max: int = 100):
    """Integer polynomial with one root per ordered one-per-pair triple,
    theta = zeta_a + s zeta_b + s^2 zeta_c; W permutes the 48 thetas
    freely, so each irreducible factor has degree exactly |G|.

    Coefficients are expanded from certified disks and pinned to unique
    integers; s is raised until the 48 values are distinct.  s = 1 is
    skipped: there the value is symmetric in the triple, so each of the
    48 ordered values repeats six times."""
    for s in range(2, s_max + 1):
        for _round in range(24):
            balls = _theta_balls(box, s)
            coeffs = expand_ball_poly(balls)
            status, out = pin_integer_coeffs(coeffs)
            if status == "ok":
                break
            box[0] = box[0].refine(box[0].eps / (1 << 48))
        else:
            raise PrecisionExhausted("triple resolvent coefficients did not pin")
        if is_squarefree(out):
            return out, s
    raise CollisionUnresolved(f"no shift s <= {s_max} separates the triple values")


def galois_class(p: IntPoly, c_max: int = 100, precision_bits: int = 128) -> GaloisReport:
    """Galois class of a special sextic among the five candidates.

    Order comes from the ordered-triple resolvent (all factor degrees
    equal |G|), the pair-orbit partition discriminates order 6 from 12,
    and the square class of disc(p) disc(q) discriminates the order-24
    class from the full group; every piece is recorded as evidence.
    """
    cls = classify_special(p)
    if not cls.is_special:
        raise NotSpecial(p.format())
    box = _root_box(p, precision_bits)
    a = companion(p)

    partition, pair_used = _pair_orbit_data(p, box, c_max)
    orbit_sizes = tuple(sorted(len(o) for o in partition))
    if sum(orbit_sizes) != 15 or RECIPROCAL_BLOCK not in partition:
        raise VerificationFailed("pair orbits do not contain the reciprocal block")

    w2_degrees = tuple(sorted(factor_over_z(char_poly(wedge_power(a, 2))).degrees()))
    w3_fl = factor_over_z(char_poly(wedge_power(a, 3)))
    w3_degrees = tuple(sorted(w3_fl.degrees()))
    t8, triples, owners = octet_data(p, box)
    t8_degrees = tuple(sorted(factor_over_z(t8).degrees()))
    one = IntPoly.parse("-1,1")
    ap_triples = tuple(t for t, f in zip(triples, owners) if f == one)

    pair_sum = char_poly(additive_compound2(a))
    if is_squarefree(pair_sum):
        pair_sum_entry = tuple(sorted(factor_over_z(pair_sum).degrees()))
    else:
        pair_sum_entry = "collision, skipped"

    r48, s_used = _triple_resolvent(p, box)
    r48_degrees = tuple(sorted(factor_over_z(r48).degrees()))
    orders = set(r48_degrees)
    if len(orders) != 1:
        raise NoCandidateMatches(
            f"triple resolvent factor degrees {r48_degrees} are not all equal"
        )
    order = r48_degrees[0]
    if order % 6 != 0 or 48 % order != 0:
        raise NoCandidateMatches(f"group order {order} outside the lattice")
    if any(order % len(o) for o in partition):
        raise NoCandidateMatches("a pair orbit size does not divide the order")

    q = cls.trace_poly
    disc_p, disc_q = discriminant(p), discriminant(q)
    in_mixed_kernel = _perfect_square(disc_p * disc_q)
    square_classes = (
        ("disc(p)", _perfect_square(disc_p)),
        ("disc(q)", _perfect_square(disc_q)),
        ("disc(p)disc(q)", in_mixed_kernel),
    )
    if square_classes[0][1] or square_classes[1][1]:
        # sign6 rejects: p has three nonreal pairs so disc(p) < 0; sign3
        # rejects: the trace cubic is irreducible with one real root
        raise NoCandidateMatches("discriminant square class contradicts (A)")

    matches = [
        g
        for g in candidate_groups()
        if g.contains_conjugation
        and g.order == order
        and g.pair_orbit_sizes == orbit_sizes
        and g.sign_product_square == in_mixed_kernel
    ]
    if ap_triples:
        matches = [g for g in matches if g.label in ("H6", "G12")]
    if not matches:
        raise NoCandidateMatches(
            f"order {order}, pair orbits {orbit_sizes}, "
            f"square class {in_mixed_kernel} fits no candidate"
        )
    label = "|".join(g.label for g in matches)

    evidence = (
        ("wedge-square", w2_degrees),
        ("wedge-cube", w3_degrees),
        ("triple-product-octet", t8_degrees),
        ("pair-sum", pair_sum_entry),
        ("pair-orbit route", pair_used),
        ("ordered-triple resolvent", ("shift", s_used) + r48_degrees),
        ("square classes", square_classes),
        (
            "order-24 separation",
            "complex conjugation lies in H24 only; decided by the "
            "disc(p)disc(q) square test",
        ),
    )
    return GaloisReport(
        class_label=label,
        order=matches[0].order if len(matches) == 1 else order,
        pair_orbits=partition,
        evidence=evidence,
    )
