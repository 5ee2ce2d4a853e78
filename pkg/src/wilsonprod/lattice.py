"""Integer lattices of full rank in Z^d, as Hermite-normal-form row bases.

A lattice is stored as a list of d rows; the matrix is upper triangular with
positive diagonal and, in each column, the entries above the pivot reduced
into [0, pivot).  With that shape the canonical representatives of Z^d
modulo the lattice are exactly the boxes prod_i [0, H[i][i]), and both
membership tests and canonical reduction are a single forward-substitution
pass.  Everything is plain Python integer arithmetic.
"""

from __future__ import annotations

from typing import Sequence

from .order import NumberFieldOrder, OrderElement


def rows_hnf(rows: Sequence[Sequence[int]], d: int) -> list[list[int]]:
    """Hermite normal form of the lattice generated by ``rows``.

    Requires full rank d (always true for the ideal lattices this package
    builds); raises ValueError otherwise.
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(d):
        while True:
            nz = [r for r in work if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            if piv[col] < 0:
                for j in range(col, d):
                    piv[j] = -piv[j]
            for r in nz[1:]:
                q = r[col] // piv[col]
                if q:
                    for j in range(col, d):
                        r[j] -= q * piv[j]
        piv = next((r for r in work if r[col]), None)
        if piv is None:
            raise ValueError("generators do not span a full-rank lattice")
        work.remove(piv)
        work = [r for r in work if any(r)]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
    # reduce entries above each pivot into [0, pivot)
    for i in range(d - 1, 0, -1):
        for k in range(i):
            q = basis[k][i] // basis[i][i]
            if q:
                for j in range(i, d):
                    basis[k][j] -= q * basis[i][j]
    return basis


def hnf_with_transform(
    rows: Sequence[Sequence[int]], d: int
) -> tuple[list[list[int]], list[list[int]]]:
    """HNF together with a unimodular U such that U * rows = stack.

    The returned ``stack`` has the HNF basis in its first rows (one per
    pivot) followed by zero rows; U is square of size len(rows).
    """
    n = len(rows)
    work = [list(r) + [1 if i == j else 0 for j in range(n)]
            for i, r in enumerate(rows)]
    out: list[list[int]] = []
    for col in range(d):
        pool = [r for r in work if any(r[:d])]
        while True:
            nz = [r for r in pool if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            if piv[col] < 0:
                for j in range(len(piv)):
                    piv[j] = -piv[j]
            for r in nz[1:]:
                q = r[col] // piv[col]
                if q:
                    for j in range(len(r)):
                        r[j] -= q * piv[j]
        piv = next((r for r in pool if r[col]), None)
        if piv is None:
            continue
        if piv[col] < 0:
            for j in range(len(piv)):
                piv[j] = -piv[j]
        work.remove(piv)
        out.append(piv)
    # clear entries above each pivot (full-width ops keep U consistent)
    for idx in range(len(out) - 1, 0, -1):
        pc = next(c for c in range(d) if out[idx][c])
        for k in range(idx):
            q = out[k][pc] // out[idx][pc]
            if q:
                for j in range(len(out[k])):
                    out[k][j] -= q * out[idx][j]
    out.extend(work)  # rows now zero in the lattice part
    stack = [r[:d] for r in out]
    transform = [r[d:] for r in out]
    return stack, transform


def lattice_det(basis: Sequence[Sequence[int]]) -> int:
    out = 1
    for i, row in enumerate(basis):
        out *= row[i]
    return out


def contains(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Is ``vec`` in the lattice?  Forward substitution along the pivots."""
    v = list(vec)
    d = len(v)
    for i in range(d):
        q, r = divmod(v[i], basis[i][i])
        if r:
            return False
        if q:
            for j in range(i + 1, d):
                v[j] -= q * basis[i][j]
    return True


def reduce_mod(basis: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple:
    """Canonical representative of ``vec`` in the box prod [0, H[i][i])."""
    v = list(vec)
    d = len(v)
    for i in range(d):
        q, r = divmod(v[i], basis[i][i])
        v[i] = r
        if q:
            for j in range(i + 1, d):
                v[j] -= q * basis[i][j]
    return tuple(v)


def identity_lattice(d: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(d)] for i in range(d)]


def lattice_product(
    o: NumberFieldOrder,
    a_basis: Sequence[Sequence[int]],
    b_basis: Sequence[Sequence[int]],
) -> list[list[int]]:
    """Basis of the product ideal, from pairwise products of basis elements."""
    d = o.degree
    rows = []
    elems_b = [o.element(r) for r in b_basis]
    for ra in a_basis:
        ea = o.element(ra)
        for eb in elems_b:
            rows.append(list(o.mul(ea, eb).coeffs))
    return rows_hnf(rows, d)


def ideal_power_lattice(
    o: NumberFieldOrder, p: int, gen_poly: Sequence[int], n: int
) -> list[list[int]]:
    """Lattice of P^n for the prime ideal P = (p, g(theta)).

    Generated as a Z-module by p^i * g(theta)^(n-i) * theta^j over
    0 <= i <= n, 0 <= j < d.  The determinant must come out as p^(n*f) with
    f = deg g; that is asserted, since it is a theorem whenever Z[theta] is
    maximal at p (which callers have already checked).
    """
    assert n >= 1
    d = o.degree
    g = o.element_from_poly(gen_poly)
    rows = []
    g_pow = o.one
    powers = [g_pow]
    for _ in range(n):
        g_pow = o.mul(g_pow, g)
        powers.append(g_pow)
    for i in range(n + 1):
        elt = o.mul_int(powers[n - i], p ** i)
        cur = elt
        for _ in range(d):
            rows.append(list(cur.coeffs))
            cur = o.mul(cur, o.theta)
    basis = rows_hnf(rows, d)
    f = len(tuple(gen_poly)) - 1
    assert lattice_det(basis) == p ** (n * f), "index of P^n must be p^(nf)"
    return basis


def principal_lattice(o: NumberFieldOrder, a: OrderElement) -> list[list[int]]:
    """Lattice of the principal ideal (a), a != 0."""
    d = o.degree
    rows = []
    cur = a
    for _ in range(d):
        rows.append(list(cur.coeffs))
        cur = o.mul(cur, o.theta)
    return rows_hnf(rows, d)


def solve_comaximal(
    l1: Sequence[Sequence[int]],
    l2: Sequence[Sequence[int]],
    target: Sequence[int],
) -> list[int]:
    """Find t in L1 with t = target (mod L2), given L1 + L2 = Z^d.

    Stacks the two bases, tracks the unimodular transform of the HNF, and
    reads the combination of L1 rows out of it.
    """
    d = len(target)
    rows = [list(r) for r in l1] + [list(r) for r in l2]
    stack, transform = hnf_with_transform(rows, d)
    for i in range(d):
        if stack[i][i] != 1 or any(stack[i][j] != 0 for j in range(d) if j != i):
            raise ValueError("lattices are not comaximal")
    # target = sum target[i] * stack_i, so its row-combination coefficients
    # on the original rows are sum target[i] * transform[i]
    combo = [0] * len(rows)
    for i in range(d):
        ti = target[i]
        if ti:
            for j in range(len(rows)):
                combo[j] += ti * transform[i][j]
    out = [0] * d
    for j in range(len(l1)):
        cj = combo[j]
        if cj:
            for k in range(d):
                out[k] += cj * l1[j][k]
    return out
