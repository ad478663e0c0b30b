"""
Symmetric functions over exact integers: m/h/e/s bases and the Hopf maps.

An element is a basis tag plus a sparse map from partitions (weakly
decreasing tuples of positive ints) to integers.  Base changes go through
the monomial basis:

  h_lambda -> m: counts of nonnegative-integer matrices with prescribed
                 row and column sums,
  e_lambda -> m: same with 0/1 matrices,
  s_lambda     : Jacobi-Trudi determinant over h,
  m -> h       : exact inversion of the h->m matrix per degree.

Power sums exist only as an internal rational-coefficient check in the
test suite; they are never part of integer outputs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations


BASES = ("m", "h", "e", "s")


class SymFunc:
    """Basis-tagged integer combination of partition-indexed elements."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[tuple[int, ...], int] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {lam: c for lam, c in (terms or {}).items() if c}

    @staticmethod
    def one(basis: str = "h") -> "SymFunc":
        return SymFunc(basis, {(): 1})

    @staticmethod
    def gen(basis: str, lam: tuple[int, ...], c: int = 1) -> "SymFunc":
        return SymFunc(basis, {tuple(lam): c})

    def __add__(self, other: "SymFunc") -> "SymFunc":
        assert self.basis == other.basis, "add requires matching bases"
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymFunc(self.basis, terms)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c * v for lam, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(lam) for lam in self.terms}
        return len(degs) <= 1

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[lam]
            body = f"{self.basis}({','.join(map(str, lam))})" if lam else "1"
            if abs(c) != 1 or body == "1":
                body = f"{abs(c)}*{body}" if body != "1" else str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SymFunc({self.text()})"


# -- partitions -------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(d: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of d with parts <= max_part, lex-decreasing order."""
    if max_part is None:
        max_part = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


# -- transition matrices ----------------------------------------------------


@lru_cache(maxsize=None)
def _matrix_count(rows: tuple[int, ...], cols: tuple[int, ...], zero_one: bool) -> int:
    """Number of nonnegative-integer (or 0/1) matrices with given margins."""
    if sum(rows) != sum(cols):
        return 0
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    total = 0
    for fill in _row_fills(r, cols, zero_one):
        newcols = tuple(c - f for c, f in zip(cols, fill))
        total += _matrix_count(rest, newcols, zero_one)
    return total


def _row_fills(r: int, cols: tuple[int, ...], zero_one: bool):
    """All ways to place r units into len(cols) cells bounded by cols."""
    if not cols:
        if r == 0:
            yield ()
        return
    hi = min(r, cols[0], 1 if zero_one else r)
    for x in range(hi + 1):
        for rest in _row_fills(r - x, cols[1:], zero_one):
            yield (x,) + rest


@lru_cache(maxsize=None)
def _h_to_m_row(lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    d = sum(lam)
    out = []
    for mu in partitions(d):
        c = _matrix_count(lam, mu, zero_one=False)
        if c:
            out.append((mu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _e_to_m_row(lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    d = sum(lam)
    out = []
    for mu in partitions(d):
        c = _matrix_count(lam, mu, zero_one=True)
        if c:
            out.append((mu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _s_to_h_row(lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Jacobi-Trudi: s_lambda = det(h_{lambda_i + j - i})."""
    r = len(lam)
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(r)):
        sign = _perm_sign(perm)
        parts = []
        ok = True
        for i in range(r):
            e = lam[i] + perm[i] - i
            if e < 0:
                ok = False
                break
            if e > 0:
                parts.append(e)
        if not ok:
            continue
        key = tuple(sorted(parts, reverse=True))
        terms[key] = terms.get(key, 0) + sign
    return tuple((mu, c) for mu, c in terms.items() if c)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _m_to_h_matrix(d: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """Rows m_lambda expressed in h: exact inverse of the h->m matrix."""
    lams = partitions(d)
    k = len(lams)
    idx = {lam: i for i, lam in enumerate(lams)}
    mat = [[Fraction(0)] * k for _ in range(k)]
    for i, lam in enumerate(lams):
        for mu, c in _h_to_m_row(lam):
            mat[i][idx[mu]] = Fraction(c)
    inv = _invert_fraction_matrix(mat)
    out: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for j, mu in enumerate(lams):
        row = {}
        for i, lam in enumerate(lams):
            v = inv[j][i]
            assert v.denominator == 1, "h->m matrix must invert over Z"
            if v:
                row[lam] = int(v)
        out[mu] = row
    return out


def _invert_fraction_matrix(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(mat)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


# -- base change ------------------------------------------------------------


def to_monomial(f: SymFunc) -> SymFunc:
    """Exact change of basis into the monomial basis."""
    if f.basis == "m":
        return f
    out: dict[tuple[int, ...], int] = {}
    for lam, c in f.terms.items():
        if f.basis == "h":
            row = _h_to_m_row(lam)
        elif f.basis == "e":
            row = _e_to_m_row(lam)
        else:  # s
            row = []
            for mu, ch in _s_to_h_row(lam):
                for nu, cm in _h_to_m_row(mu):
                    row.append((nu, ch * cm))
        for mu, v in row:
            out[mu] = out.get(mu, 0) + c * v
    return SymFunc("m", out)


def to_homogeneous(f: SymFunc) -> SymFunc:
    """Exact change of basis into the h basis."""
    if f.basis == "h":
        return f
    fm = to_monomial(f)
    out: dict[tuple[int, ...], int] = {}
    by_degree: dict[int, dict[tuple[int, ...], int]] = {}
    for lam, c in fm.terms.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    for d, terms in by_degree.items():
        table = _m_to_h_matrix(d)
        for lam, c in terms.items():
            for mu, v in table[lam].items():
                out[mu] = out.get(mu, 0) + c * v
    return SymFunc("h", out)


# -- ring structure ----------------------------------------------------------


def _merge_sorted(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _m_product_rows(
    lam: tuple[int, ...], mu: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """m_lambda * m_mu in the m basis, via expansion in enough variables."""
    nvars = len(lam) + len(mu)
    if nvars == 0:
        return (((), 1),)
    fa = _monomial_orbit(lam, nvars)
    fb = _monomial_orbit(mu, nvars)
    prod: dict[tuple[int, ...], int] = {}
    for ea, ca in fa.items():
        for eb, cb in fb.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            prod[exp] = prod.get(exp, 0) + ca * cb
    # the m_nu coefficient is read off the sorted-decreasing exponent vector
    out = []
    for exp, c in prod.items():
        if exp == tuple(sorted(exp, reverse=True)):
            out.append((_strip(exp), c))
    return tuple(out)


def _strip(exp: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x for x in sorted(exp, reverse=True) if x)


def _monomial_orbit(lam: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], int]:
    """m_lambda in nvars variables as {exponent vector: 1}."""
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return {exp: 1 for exp in set(permutations(padded))}


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product; h*h stays in h (free concatenation), otherwise via m."""
    if f.basis == "h" and g.basis == "h":
        terms: dict[tuple[int, ...], int] = {}
        for lam, c in f.terms.items():
            for mu, d in g.terms.items():
                key = _merge_sorted(lam, mu)
                terms[key] = terms.get(key, 0) + c * d
        return SymFunc("h", terms)
    fm, gm = to_monomial(f), to_monomial(g)
    terms = {}
    for lam, c in fm.terms.items():
        for mu, d in gm.terms.items():
            for nu, v in _m_product_rows(lam, mu):
                terms[nu] = terms.get(nu, 0) + c * d * v
    return SymFunc("m", terms)


# -- Hopf structure ----------------------------------------------------------


def hall_pairing(f: SymFunc, g: SymFunc) -> int:
    """The Hall inner product, <h_lambda, m_mu> = delta."""
    fh = to_homogeneous(f)
    gm = to_monomial(g)
    return sum(c * gm.terms.get(lam, 0) for lam, c in fh.terms.items())


def coproduct_sym(f: SymFunc) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """Coproduct in the h (x) h basis: h_d -> sum h_j (x) h_{d-j}."""
    fh = to_homogeneous(f)
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for lam, c in fh.terms.items():
        pieces = {((), ()): 1}
        for part in lam:
            nxt: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
            for (a, b), v in pieces.items():
                for j in range(part + 1):
                    left = _merge_sorted(a, (j,) if j else ())
                    right = _merge_sorted(b, (part - j,) if part - j else ())
                    key = (left, right)
                    nxt[key] = nxt.get(key, 0) + v
            pieces = nxt
        for key, v in pieces.items():
            out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _e_in_h(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """e_d in the h basis via e_d = sum_{i>=1} (-1)^{i-1} h_i e_{d-i}."""
    if d == 0:
        return (((), 1),)
    terms: dict[tuple[int, ...], int] = {}
    for i in range(1, d + 1):
        sign = 1 if i % 2 == 1 else -1
        for mu, c in _e_in_h(d - i):
            key = _merge_sorted(mu, (i,))
            terms[key] = terms.get(key, 0) + sign * c
    return tuple((mu, c) for mu, c in terms.items() if c)


def omega(f: SymFunc) -> SymFunc:
    """The involution swapping h_i and e_i; input/output in the h basis."""
    fh = to_homogeneous(f)
    out = SymFunc("h")
    for lam, c in fh.terms.items():
        piece = SymFunc("h", {(): c})
        for part in lam:
            ed = SymFunc("h", dict(_e_in_h(part)))
            piece = multiply(piece, ed)
        out = out + piece
    return out


def antipode(f: SymFunc) -> SymFunc:
    """(-1)^d omega on each homogeneous degree-d component."""
    fh = to_homogeneous(f)
    out = SymFunc("h")
    for lam, c in fh.terms.items():
        sign = 1 if sum(lam) % 2 == 0 else -1
        out = out + omega(SymFunc("h", {lam: sign * c}))
    return out


def counit(f: SymFunc) -> int:
    """The constant term."""
    return to_homogeneous(f).terms.get((), 0)


def project_quotient_n(f: SymFunc, n: int) -> SymFunc:
    """Image in the quotient by monomials with a part >= n (m basis)."""
    fm = to_monomial(f)
    return SymFunc(
        "m", {lam: c for lam, c in fm.terms.items() if not lam or lam[0] < n}
    )
