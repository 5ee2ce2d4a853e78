"""Closed-form classification of the product of all units in o/a.

The product of all elements of a finite abelian group is trivial unless the
group has exactly one element of order 2, in which case the product equals
that element.  For unit groups of residue rings the relevant dimension
d2 = dim_F2 of the 2-torsion is computable from the local invariants
(p, e, f, n) alone, and in the three cases where d2 = 1 the order-2 element
has an explicit form: -1, 1+pi, or 1+pi^2 for a uniformizer pi.  This module
implements those rules, evaluates the symbolic answers to concrete residue
classes (embedding through the Chinese remainder decomposition for composite
moduli), and provides the classical rules for Z as an independent code path.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from . import lattice
from .errors import NotUniqueTorsion, UniformizerNotFound
from .order import NumberFieldOrder, OrderElement
from .primes import FactoredIdeal, PrimeIdealData, factor_prime, valuation
from .residue import (
    DEFAULT_CAP,
    Census,
    ResidueElement,
    ResidueRing,
    build_residue_ring,
    cached_power_basis,
)


class ProductClass(Enum):
    """The four possible values of the product of all units."""

    ONE = "one"
    MINUS_ONE = "minus_one"
    ONE_PLUS_PI = "one_plus_pi"
    ONE_PLUS_PI_SQ = "one_plus_pi_sq"

    def symbol(self) -> str:
        return {"one": "1", "minus_one": "-1", "one_plus_pi": "1+pi",
                "one_plus_pi_sq": "1+pi^2"}[self.value]


@dataclass(frozen=True)
class D2Class:
    """Either an exact 2-torsion dimension or the verdict "more than one".

    Exact values are asserted only in the regimes where they are proved;
    everywhere else the classification needs no more than d2 >= 2, which is
    what ``more_than_one`` records.
    """

    value: int | None  # None encodes "> 1"

    @staticmethod
    def exact(k: int) -> "D2Class":
        return D2Class(k)

    @staticmethod
    def more_than_one() -> "D2Class":
        return D2Class(None)

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def matches_census(self, d2: int) -> bool:
        return d2 == self.value if self.is_exact else d2 >= 2

    def __str__(self) -> str:
        return f"{self.value}" if self.is_exact else ">1"


def d2_sum(classes: Iterable[D2Class]) -> D2Class:
    """Total d2 over a direct product; additive when every term is exact."""
    total = 0
    for c in classes:
        if not c.is_exact:
            return D2Class.more_than_one()
        total += c.value
    return D2Class.exact(total)


# ---------------------------------------------------------------------------
# Abstract abelian groups: the sum of all elements.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroupSpec:
    """A finite abelian group given as a product of cyclic groups."""

    cyclic_orders: tuple

    def __post_init__(self):
        assert all(n >= 2 for n in self.cyclic_orders), \
            "cyclic factors must have order at least 2"

    @property
    def d2(self) -> int:
        return sum(1 for n in self.cyclic_orders if n % 2 == 0)

    @property
    def size(self) -> int:
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out


def group_sum(spec: AbelianGroupSpec) -> tuple:
    """Sum of all elements: zero unless exactly one cyclic order is even,
    in which case it is the unique order-2 element (n/2 in that slot)."""
    evens = [i for i, n in enumerate(spec.cyclic_orders) if n % 2 == 0]
    out = [0] * len(spec.cyclic_orders)
    if len(evens) == 1:
        out[evens[0]] = spec.cyclic_orders[evens[0]] // 2
    return tuple(out)


def group_sum_enumerated(spec: AbelianGroupSpec) -> tuple:
    """Brute-force sum over every element; the oracle for group_sum."""
    totals = [0] * len(spec.cyclic_orders)
    for el in itertools.product(*(range(n) for n in spec.cyclic_orders)):
        for i, c in enumerate(el):
            totals[i] += c
    return tuple(t % n for t, n in zip(totals, spec.cyclic_orders))


# ---------------------------------------------------------------------------
# Local rules at one prime power P^n.
# ---------------------------------------------------------------------------

def d2_local(p: int, e: int, f: int, n: int) -> D2Class:
    """2-torsion dimension of (o/P^n)^x from the local invariants.

    The rules, in order: odd residue characteristic gives a cyclic-type
    2-part (d2 = 1); for p = 2 the first two unit-filtration layers give 0
    and f; the depth-3 totally-residual case gives 1; the unramified
    rational case (e = f = 1, n > 2) gives 2; beyond twice the ramification
    (n > 2e) the dimension stabilizes at 1 + e*f; in the remaining band only
    d2 > 1 is asserted.
    """
    assert e >= 1 and f >= 1 and n >= 1
    if p != 2:
        return D2Class.exact(1)
    if n == 1:
        return D2Class.exact(0)
    if n == 2:
        return D2Class.exact(f)
    if n == 3 and f == 1 and e > 1:
        return D2Class.exact(1)
    if e == 1 and f == 1:  # n > 2
        return D2Class.exact(2)
    if n > 2 * e:
        return D2Class.exact(1 + e * f)
    return D2Class.more_than_one()


def d2_of_ideal(a: FactoredIdeal) -> D2Class:
    """Global d2, additive over the prime-power factors of a."""
    return d2_sum(d2_local(pd.p, pd.e, pd.f, m) for pd, m in a.factors)


def order2_local(p: int, e: int, f: int, n: int) -> ProductClass:
    """Symbol of the unique order-2 element of (o/P^n)^x, when unique."""
    if d2_local(p, e, f, n) != D2Class.exact(1):
        raise NotUniqueTorsion(
            f"(p={p}, e={e}, f={f}, n={n}) does not have a unique order-2 "
            "element")
    if p != 2:
        return ProductClass.MINUS_ONE
    if n == 2:  # f = 1 forced by d2 = 1
        return ProductClass.ONE_PLUS_PI
    return ProductClass.ONE_PLUS_PI_SQ  # n = 3, f = 1, e > 1


def uniformizer(o: NumberFieldOrder, pd: PrimeIdealData) -> OrderElement:
    """An element of P of valuation exactly 1.

    g(theta) works unless it falls into P^2, which can only happen in the
    unramified case, where adding p (valuation e = 1) repairs it.
    """
    g = o.element_from_poly(pd.gen_poly)
    if valuation(o, pd, g) == 1:
        return g
    shifted = o.add(g, o.from_int(pd.p))
    if valuation(o, pd, shifted) == 1:
        return shifted
    raise UniformizerNotFound(
        f"no valuation-1 element among g(theta), g(theta)+p at {pd}")


# ---------------------------------------------------------------------------
# Global classification.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WilsonProduct:
    """Classified product of all units of o/a.

    ``prime`` is the prime ideal the uniformizer lives at (the 1+pi cases
    only); ``witness`` is the evaluated residue class when the ring was
    within the enumeration cap, else None.
    """

    kind: ProductClass
    prime: PrimeIdealData | None
    witness: ResidueElement | None

    def to_json(self) -> dict:
        return {
            "class": self.kind.value,
            "prime": self.prime.to_json() if self.prime else None,
            "witness": list(self.witness.coeffs) if self.witness else None,
        }


def _contributing_factor(a: FactoredIdeal):
    """The unique factor with local d2 = 1, if the global d2 is exactly 1."""
    hit = None
    for pd, m in a.factors:
        c = d2_local(pd.p, pd.e, pd.f, m)
        if c == D2Class.exact(1):
            if hit is not None:
                return None
            hit = (pd, m)
        elif c != D2Class.exact(0):
            return None
    return hit


def witness_element(o: NumberFieldOrder, a: FactoredIdeal,
                    kind: ProductClass, prime: PrimeIdealData | None,
                    ring: ResidueRing, *, lattice_cache: dict | None = None,
                    pi: OrderElement | None = None) -> ResidueElement:
    """Evaluate the symbolic answer to a residue class of o/a.

    For the 1+pi forms over a composite modulus, the symbol is local to one
    prime power, so the global representative must be congruent to 1+pi^j
    there and to 1 at every other factor; a lattice congruence solve
    produces that representative.  (Taking 1+pi globally is wrong whenever
    pi is a unit at one of the other factors.)
    """
    if kind is ProductClass.ONE:
        return ring.one
    if kind is ProductClass.MINUS_ONE:
        # every other factor is an even prime with exponent 1, and -1 = 1
        # in those residue fields, so the global -1 already embeds the symbol
        return ring.reduce([-1] + [0] * (o.degree - 1))
    pd = prime
    m = next(m for q, m in a.factors if q == pd)
    if pi is None:
        pi = uniformizer(o, pd)
    loc = pi if kind is ProductClass.ONE_PLUS_PI else o.mul(pi, pi)
    if len(a.factors) == 1:
        return ring.reduce(o.add(o.one, loc))
    cache = lattice_cache if lattice_cache is not None else {}
    rest = None
    for q, mq in a.factors:
        if q == pd:
            continue
        basis = cached_power_basis(o, q, mq, cache)
        rest = basis if rest is None else lattice.lattice_product(o, rest, basis)
    pm = cached_power_basis(o, pd, m, cache)
    t = lattice.solve_comaximal(rest, pm, loc.coeffs)
    return ring.reduce(o.add(o.one, o.element(t)))


def classify_global(o: NumberFieldOrder, a: FactoredIdeal, *,
                    cap: int = DEFAULT_CAP, ring: ResidueRing | None = None,
                    lattice_cache: dict | None = None,
                    pi_cache: dict | None = None) -> WilsonProduct:
    """Closed-form product of all units of o/a, with an evaluated witness.

    Pure arithmetic on the factor invariants decides the class; the witness
    residue class is evaluated whenever |o/a| fits under ``cap`` (a provided
    ``ring`` is trusted and used directly).
    """
    kind = ProductClass.ONE
    prime = None
    pi = None
    if d2_of_ideal(a) == D2Class.exact(1):
        pd, m = _contributing_factor(a)
        kind = order2_local(pd.p, pd.e, pd.f, m)
        if kind is not ProductClass.MINUS_ONE:
            prime = pd
            if pi_cache is not None:
                key = (pd.p, pd.index)
                if key not in pi_cache:
                    pi_cache[key] = uniformizer(o, pd)
                pi = pi_cache[key]
    if ring is None:
        if a.absolute_norm > cap:
            return WilsonProduct(kind, prime, None)
        ring = build_residue_ring(o, a, cap=cap, lattice_cache=lattice_cache)
    witness = witness_element(o, a, kind, prime, ring,
                              lattice_cache=lattice_cache, pi=pi)
    return WilsonProduct(kind, prime, witness)


# ---------------------------------------------------------------------------
# The classical case o = Z, as an independent code path.
# ---------------------------------------------------------------------------

def classify_gauss(A: int) -> int:
    """-1 if the product of all units of Z/A is -1, else +1; by form of A.

    The -1 cases are exactly A = 4, A = p^m, and A = 2*p^m for odd primes p.
    A = 2 returns +1 (the product is the empty-ish 1; -1 = 1 there anyway).
    """
    if A < 2:
        raise ValueError("A must be at least 2")
    if A == 4:
        return -1
    odd = A // 2 if A % 2 == 0 else A
    if odd == 1 or odd % 2 == 0:
        return 1
    p = None
    k = 3
    while k * k <= odd:
        if odd % k == 0:
            p = k
            break
        k += 2
    if p is None:
        return -1  # odd itself is prime
    while odd % p == 0:
        odd //= p
    return -1 if odd == 1 else 1


def gauss_product(A: int) -> int:
    """Brute-force product over (Z/A)^x, as a plain integer loop."""
    prod = 1
    for x in range(1, A):
        if math.gcd(x, A) == 1:
            prod = prod * x % A
    return prod


# ---------------------------------------------------------------------------
# Oracle verification: one ideal, then sweeps over many.
# ---------------------------------------------------------------------------

@dataclass
class VerifyResult:
    """Closed form vs. brute force for one modulus."""

    ideal: FactoredIdeal
    predicted: WilsonProduct
    actual: ResidueElement
    census: Census | None
    ring: ResidueRing

    @property
    def match(self) -> bool:
        return (self.predicted.witness is not None
                and self.predicted.witness.coeffs == self.actual.coeffs)

    def to_json(self) -> dict:
        out = {
            "ideal": self.ideal.label(),
            "predicted": self.predicted.to_json(),
            "product": list(self.actual.coeffs),
            "match": self.match,
        }
        if self.census is not None:
            out["census"] = {
                "d2": self.census.d2,
                "order2_count": self.census.count,
                "solutions": [list(s.coeffs) for s in self.census.elements],
            }
        return out


def verify_ideal(o: NumberFieldOrder, a: FactoredIdeal, *,
                 cap: int = DEFAULT_CAP, ring: ResidueRing | None = None,
                 lattice_cache: dict | None = None,
                 pi_cache: dict | None = None,
                 with_census: bool = True) -> VerifyResult:
    """Compare the classified product against honest enumeration."""
    if ring is None:
        ring = build_residue_ring(o, a, cap=cap, lattice_cache=lattice_cache)
    predicted = classify_global(o, a, cap=cap, ring=ring,
                                lattice_cache=lattice_cache, pi_cache=pi_cache)
    actual = ring.unit_product()
    census = ring.order2_census() if with_census else None
    return VerifyResult(a, predicted, actual, census, ring)


def sweep_ideals(o: NumberFieldOrder, max_norm: int, *,
                 prime_bound: int = 13,
                 exp_cap: int = 8) -> Iterator[FactoredIdeal]:
    """All nonunit ideals supported on primes above p <= prime_bound, with
    every exponent <= exp_cap and norm <= max_norm, in a fixed order."""
    pds = []
    for p in range(2, prime_bound + 1):
        if all(p % q for q in range(2, p)):
            pds.extend(factor_prime(o, p))

    def rec(i: int, chosen: list, norm: int) -> Iterator[FactoredIdeal]:
        if i == len(pds):
            if chosen:
                yield FactoredIdeal(tuple(chosen))
            return
        yield from rec(i + 1, chosen, norm)
        q = pds[i].residue_size
        nm = norm
        for m in range(1, exp_cap + 1):
            nm *= q
            if nm > max_norm:
                break
            yield from rec(i + 1, chosen + [(pds[i], m)], nm)

    yield from rec(0, [], 1)


@dataclass
class SweepSummary:
    """Aggregate outcome of verifying every ideal in a sweep."""

    cases: int
    matches: int
    class_counts: dict
    mismatches: list

    @property
    def ok(self) -> bool:
        return self.matches == self.cases

    def to_json(self) -> dict:
        return {
            "cases": self.cases,
            "matches": self.matches,
            "ok": self.ok,
            "classes": dict(self.class_counts),
            "mismatches": self.mismatches,
        }


def sweep_field(o: NumberFieldOrder, max_norm: int, *,
                prime_bound: int = 13, exp_cap: int = 8,
                cap: int = DEFAULT_CAP) -> SweepSummary:
    """Verify every sweep ideal of the order; collect mismatches with their
    censuses (the main regression instrument of the package)."""
    lattice_cache: dict = {}
    pi_cache: dict = {}
    counts: Counter = Counter()
    mismatches = []
    cases = matches = 0
    for a in sweep_ideals(o, min(max_norm, cap),
                          prime_bound=prime_bound, exp_cap=exp_cap):
        res = verify_ideal(o, a, cap=cap, lattice_cache=lattice_cache,
                           pi_cache=pi_cache, with_census=False)
        cases += 1
        counts[res.predicted.kind.value] += 1
        if res.match:
            matches += 1
        else:
            census = res.ring.order2_census()
            mismatches.append({
                "ideal": a.label(),
                "predicted": res.predicted.to_json(),
                "product": list(res.actual.coeffs),
                "census": {
                    "d2": census.d2,
                    "solutions": [list(s.coeffs) for s in census.elements],
                },
            })
    return SweepSummary(cases, matches, dict(counts), mismatches)
