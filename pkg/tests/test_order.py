"""Arithmetic in Z[theta]: construction guards, ring axioms, norms.

Frozen norm values below were derived two independent ways before being
asserted here: the resultant path (what `norm` implements) and the index
|o/(a)| obtained from the HNF of the principal-ideal lattice, counted by
explicit enumeration of residue classes in `test_norm_is_lattice_index`.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilsonprod import lattice
from wilsonprod.errors import DegreeMismatch, DegreeZero, NotMonic, ParseError, Reducible
from wilsonprod.order import make_order, parse_poly, poly_str


class TestParsePoly:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1,0,1", (1, 0, 1)),
            ("x^2+1", (1, 0, 1)),
            ("x^2 + 1", (1, 0, 1)),
            ("-2,0,1", (-2, 0, 1)),
            ("x^2-2", (-2, 0, 1)),
            ("x^2-x-1", (-1, -1, 1)),
            ("x^4+1", (1, 0, 0, 0, 1)),
            ("x", (0, 1)),
            ("2x^3 - 7x + 5", (5, -7, 0, 2)),
            ("3*x^2+2*x+1", (1, 2, 3)),
            ("-x^2+x", (0, 1, -1)),
        ],
    )
    def test_formats(self, text, expected):
        assert parse_poly(text) == expected

    @pytest.mark.parametrize("text", ["", "x^", "1,,2", "x+y", "++x", "x 1"])
    def test_garbage(self, text):
        with pytest.raises(ParseError):
            parse_poly(text)

    def test_roundtrip_str(self):
        assert poly_str((-1, -1, 1)) == "x^2 - x - 1"
        assert poly_str((1, 0, 1)) == "x^2 + 1"
        assert parse_poly(poly_str((5, -7, 0, 2))) == (5, -7, 0, 2)


class TestMakeOrder:
    def test_accepts_catalog(self):
        for poly in [(0, 1), (1, 0, 1), (-2, 0, 1), (1, 1, 1), (1, 0, 0, 0, 1)]:
            assert make_order(poly).poly == poly

    def test_not_monic(self):
        with pytest.raises(NotMonic):
            make_order((1, 0, 2))
        with pytest.raises(NotMonic):
            make_order((1, 0, -1))  # leading -1 is not monic either

    def test_degree_zero(self):
        with pytest.raises(DegreeZero):
            make_order("5")
        with pytest.raises(DegreeZero):
            make_order((7,))

    @pytest.mark.parametrize(
        "poly",
        [
            (-1, 0, 1),        # x^2-1 = (x-1)(x+1)
            (0, 0, 1),         # x^2
            (4, 0, 0, 0, 1),   # x^4+4 = (x^2-2x+2)(x^2+2x+2), no rational root
            (1, 2, 1),         # (x+1)^2
            (-6, 1, 1),        # (x+3)(x-2)
            (0, 1, 0, 1),      # x(x^2+1)
        ],
    )
    def test_reducible(self, poly):
        with pytest.raises(Reducible):
            make_order(poly)

    def test_irreducible_quartics(self):
        # no rational roots and no quadratic factors; exercises the search
        make_order((1, 0, 0, 0, 1))
        make_order((2, 0, 0, 0, 1))  # x^4+2, Eisenstein at 2
        make_order((1, 1, 1, 1, 1))  # 5th cyclotomic


class TestArithmetic:
    def test_mul_examples(self, zi):
        i = zi.element((0, 1))
        assert zi.mul(i, i) == zi.from_int(-1)
        assert zi.mul(zi.one, i) == i
        s = make_order((-2, 0, 1))
        r = s.element((0, 1))
        assert s.mul(r, r) == s.from_int(2)

    def test_add_sub(self, zi):
        a, b = zi.element((1, 2)), zi.element((3, -1))
        assert zi.add(a, b) == zi.element((4, 1))
        assert zi.sub(a, b) == zi.element((-2, 3))
        assert zi.add(a, zi.neg(a)) == zi.zero

    def test_degree_mismatch(self, zi, catalog):
        z8 = catalog["zeta8"]
        with pytest.raises(DegreeMismatch):
            zi.add(zi.one, z8.one)
        with pytest.raises(DegreeMismatch):
            zi.element((1, 2, 3))

    def test_degree_one_is_integer_arithmetic(self):
        o = make_order((0, 1))
        rng = random.Random(11)
        for _ in range(50):
            m, n = rng.randint(-99, 99), rng.randint(-99, 99)
            assert o.mul(o.from_int(m), o.from_int(n)) == o.from_int(m * n)
            assert o.norm(o.from_int(m)) == abs(m)

    def test_pow(self, zi):
        i = zi.element((0, 1))
        assert zi.pow(i, 4) == zi.one
        assert zi.pow(i, 3) == zi.neg(i)
        assert zi.pow(zi.element((1, 1)), 2) == zi.element((0, 2))

    def test_element_from_poly_reduces(self, zi):
        # theta^2 + 1 = 0 in Z[i]
        assert zi.element_from_poly((1, 0, 1)) == zi.zero
        assert zi.element_from_poly((0, 0, 0, 1)) == zi.neg(zi.element((0, 1)))


class TestNorm:
    def test_frozen_values(self, zi):
        # N(1+i) = 2 and N(2) = 4: resultant computation, cross-checked by
        # the lattice index in test_norm_is_lattice_index
        assert zi.norm(zi.element((1, 1))) == 2
        assert zi.norm(zi.from_int(2)) == 4
        assert zi.norm(zi.one) == 1
        assert zi.norm(zi.zero) == 0

    def test_norm_is_lattice_index(self, catalog):
        """|N(a)| equals |o/(a)|, counted by enumerating residue classes."""
        rng = random.Random(5)
        for o in catalog.values():
            d = o.degree
            for _ in range(8):
                a = o.element([rng.randint(-4, 4) for _ in range(d)])
                n = o.norm(a)
                if n == 0 or n ** d > 400_000:
                    continue
                basis = lattice.principal_lattice(o, a)
                # every class has a representative with coordinates in [0, n)
                reps = set()
                vec = [0] * d
                while True:
                    reps.add(lattice.reduce_mod(basis, vec))
                    k = 0
                    while k < d:
                        vec[k] += 1
                        if vec[k] < n:
                            break
                        vec[k] = 0
                        k += 1
                    if k == d:
                        break
                assert len(reps) == n

    @given(
        coeffs_a=st.lists(st.integers(-10, 10), min_size=2, max_size=2),
        coeffs_b=st.lists(st.integers(-10, 10), min_size=2, max_size=2),
    )
    @settings(max_examples=80, deadline=None)
    def test_norm_multiplicative_gaussian(self, coeffs_a, coeffs_b):
        o = make_order((1, 0, 1))
        a, b = o.element(coeffs_a), o.element(coeffs_b)
        assert o.norm(o.mul(a, b)) == o.norm(a) * o.norm(b)

    def test_norm_multiplicative_catalog(self, catalog):
        rng = random.Random(17)
        for o in catalog.values():
            d = o.degree
            for _ in range(25):
                a = o.element([rng.randint(-10, 10) for _ in range(d)])
                b = o.element([rng.randint(-10, 10) for _ in range(d)])
                assert o.norm(o.mul(a, b)) == o.norm(a) * o.norm(b)


class TestRingAxioms:
    def test_random_identities(self, catalog):
        rng = random.Random(23)
        for o in catalog.values():
            d = o.degree
            for _ in range(20):
                a = o.element([rng.randint(-8, 8) for _ in range(d)])
                b = o.element([rng.randint(-8, 8) for _ in range(d)])
                c = o.element([rng.randint(-8, 8) for _ in range(d)])
                assert o.mul(a, b) == o.mul(b, a)
                assert o.mul(o.mul(a, b), c) == o.mul(a, o.mul(b, c))
                assert o.mul(a, o.add(b, c)) == o.add(o.mul(a, b), o.mul(a, c))
                assert o.mul(a, o.one) == a
