"""Exact integer linear algebra for signed Laplacians.

Characteristic polynomials are computed division-free over the integers, and
the edge-addition oracle decides integral spectral shifts purely through
polynomial identities, independent of any combinatorial characterization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import MutableMapping

from .graphs import SignedGraph, _check_parity
from .polynomials import IntPoly

NONE = "none"
TYPE1 = "type1"
TYPE2 = "type2"


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )


def signed_laplacian(g: SignedGraph) -> IntMatrix:
    """Degree diagonal minus signed adjacency: even edge -1, odd edge +1."""
    rows = []
    for u in g.vertices:
        adj = g.adjacency(u)
        row = [0] * g.n
        row[u - 1] = len(adj)
        for x, is_odd in adj.items():
            row[x - 1] = 1 if is_odd else -1
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def char_poly(m: IntMatrix) -> IntPoly:
    """det(xI - m), monic with exact integer coefficients.

    Faddeev-LeVerrier recurrence; every internal division is exact.  Runs on
    plain lists to keep the inner loops cheap.
    """
    n = m.n
    rows = [list(row) for row in m.rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in rows]
    c = -sum(mk[i][i] for i in range(n))
    coeffs[n - 1] = c
    rng = range(n)
    for k in range(2, n + 1):
        for i in rng:
            mk[i][i] += c
        mk = [
            [sum(row[h] * mk[h][j] for h in rng) for j in rng] for row in rows
        ]
        t = sum(mk[i][i] for i in rng)
        if t % k:
            raise ArithmeticError("inexact trace division in char_poly")
        c = -(t // k)
        coeffs[n - k] = c
    return IntPoly(tuple(coeffs))


def _divisors(value: int) -> list[int]:
    value = abs(value)
    small: list[int] = []
    large: list[int] = []
    i = 1
    while i * i <= value:
        if value % i == 0:
            small.append(i)
            if i != value // i:
                large.append(value // i)
        i += 1
    return small + large[::-1]


@dataclass(frozen=True)
class IntegerSpectrum:
    """Integer roots peeled from a monic polynomial, plus any residual factor
    with no integer roots; the product of both reconstructs the input."""

    roots: tuple[int, ...]
    residual: IntPoly | None = None

    @property
    def is_integral(self) -> bool:
        return self.residual is None

    def to_json(self) -> list[int] | str:
        return list(self.roots) if self.is_integral else "non-integral"


def integer_spectrum(p: IntPoly) -> IntegerSpectrum:
    """Full integer root multiset of a monic polynomial, or the residual."""
    if not p.is_monic:
        raise ValueError("monic polynomial required")
    roots: list[int] = []
    q = p
    x = IntPoly.x()
    while q.degree > 0 and q.coeffs[0] == 0:
        q = q.div_exact(x)
        roots.append(0)
    if q.degree > 0:
        for d in _divisors(q.coeffs[0]):
            for r in (d, -d):
                while q.degree > 0 and q(r) == 0:
                    q = q.div_exact(IntPoly((-r, 1)))
                    roots.append(r)
            if q.degree == 0:
                break
    if q.degree <= 0:
        return IntegerSpectrum(tuple(sorted(roots)))
    return IntegerSpectrum(tuple(sorted(roots)), q)


@dataclass(frozen=True)
class SivVerdict:
    """Outcome of an integral-variation decision.

    kind "type1": one eigenvalue lam rises by 2.  kind "type2": two
    eigenvalues summing to s with product p each rise by 1.  The certificate
    holds the factor polynomials of the verified shift identity; conditions
    carries per-block diagnostics when produced by the combinatorial check.
    """

    kind: str
    lam: int | None = None
    s: int | None = None
    p: int | None = None
    certificate: tuple[IntPoly, ...] | None = None
    conditions: tuple[tuple[str, bool], ...] | None = None

    @property
    def params(self) -> tuple[str, int | None, int | None, int | None]:
        return (self.kind, self.lam, self.s, self.p)

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.s is not None:
            out["s"] = self.s
        if self.p is not None:
            out["p"] = self.p
        if self.conditions is not None:
            out["conditions"] = dict(self.conditions)
        return out


PolyCache = MutableMapping[SignedGraph, IntPoly]


def laplacian_char_poly(g: SignedGraph, cache: PolyCache | None = None) -> IntPoly:
    """char_poly(signed_laplacian(g)), optionally memoized by graph."""
    if cache is None:
        return char_poly(signed_laplacian(g))
    poly = cache.get(g)
    if poly is None:
        poly = char_poly(signed_laplacian(g))
        cache[g] = poly
    return poly


def verify_shift_identity(p: IntPoly, p_after: IntPoly, verdict: SivVerdict) -> bool:
    """Re-check the exact polynomial identity claimed by a verdict."""
    if verdict.kind == NONE:
        raise ValueError("verdict carries no shift to verify")
    if p.degree != p_after.degree:
        raise ValueError("characteristic polynomials must have equal degree")
    if verdict.kind == TYPE1:
        if verdict.lam is None:
            raise ValueError("type-1 verdict requires lam")
        lam = verdict.lam
        return p_after * IntPoly((-lam, 1)) == p * IntPoly((-lam - 2, 1))
    if verdict.kind == TYPE2:
        if verdict.s is None or verdict.p is None:
            raise ValueError("type-2 verdict requires s and p")
        q = IntPoly((verdict.p, -verdict.s, 1))
        return p_after * q == p * q.shifted(-1)
    raise ValueError(f"unknown verdict kind {verdict.kind!r}")


def siv_oracle(
    g: SignedGraph,
    v: int,
    w: int,
    parity: str,
    cache: PolyCache | None = None,
) -> SivVerdict:
    """Decide integral spectral variation for adding edge vw, by exact algebra.

    With p, p' the characteristic polynomials before and after the addition
    and delta = p' - p (never zero: traces differ by 2):

      * one eigenvalue lam rises by 2  iff  x*delta + 2p == lam*delta, and
      * two eigenvalues rise by 1 with sum s and product rho  iff
        (x-1)^2 p - s(x-1) p - x^2 p' + s x p' == rho*delta,

    where s is pinned to d1+d2+1 by the trace of the squared Laplacians.
    The type-1 test must run first: its success implies the type-2 identity
    also holds (with the eigenvalue pair (lam, lam+1)), never vice versa.
    """
    _check_parity(parity)
    if v == w:
        raise ValueError("v and w must be distinct")
    if g.has_edge(v, w):
        raise ValueError(f"vertices {v} and {w} are adjacent")
    p = laplacian_char_poly(g, cache)
    p_after = laplacian_char_poly(g.add_edge(v, w, parity), cache)
    delta = p_after - p
    x = IntPoly.x()

    lam = (x * delta + 2 * p).constant_multiple_of(delta)
    if lam is not None:
        verdict = SivVerdict(
            TYPE1,
            lam=lam,
            certificate=(IntPoly((-lam, 1)), IntPoly((-lam - 2, 1))),
        )
        if not verify_shift_identity(p, p_after, verdict):
            raise ArithmeticError("type-1 certificate failed to verify")
        return verdict

    s = g.degree(v) + g.degree(w) + 1
    # (x-1)^2 - s(x-1) times p, minus (x^2 - sx) times p'
    combo = p * IntPoly((s + 1, -s - 2, 1)) - p_after * IntPoly((0, -s, 1))
    rho = combo.constant_multiple_of(delta)
    if rho is not None:
        q = IntPoly((rho, -s, 1))
        verdict = SivVerdict(TYPE2, s=s, p=rho, certificate=(q, q.shifted(-1)))
        if not verify_shift_identity(p, p_after, verdict):
            raise ArithmeticError("type-2 certificate failed to verify")
        return verdict
    return SivVerdict(NONE)
