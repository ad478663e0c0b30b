"""
Type-A affine root data and the exact polynomial scalar ring.

The scalars form the ring S = Z[a1, ..., a_{n-1}] where ai stands for the
simple root alpha_i.  The affine node 0 carries no variable of its own:
alpha_0 is always eliminated as -(a1 + ... + a_{n-1}), the level-zero
convention (the imaginary root is sent to 0).

Polynomials are sparse dicts from exponent vectors to arbitrary-precision
integers.  All values are immutable after construction and every operation
is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product


class RankError(ValueError):
    """Raised for ranks outside the supported range (n >= 2)."""


class DegreeError(ValueError):
    """Raised when an operation needs a homogeneous degree-1 input."""


class DivisionError(ArithmeticError):
    """Raised when a divided difference fails to divide exactly.

    This indicates a broken reflection, not bad user input; callers must
    not catch and continue.
    """


@dataclass(frozen=True)
class CartanData:
    """Affine type-A Cartan matrix on node set Z/n.

    ``a[i][j]`` is the pairing of the simple root alpha_j against the
    simple coroot alpha_i (row = coroot, column = weight).
    """

    n: int
    a: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.a[i % self.n][j % self.n]


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> CartanData:
    """Affine type-A Cartan data of rank parameter n (nodes Z/n).

    Realized from alpha_i = e_i - e_{i+1 mod n} in Z^n, so for n = 2 the
    off-diagonal entries are -2 (the two roots are opposite up to sign in
    both coordinates).
    """
    if n < 2:
        raise RankError(f"rank parameter must be >= 2, got {n}")
    rows = []
    for i in range(n):
        ei = _root_realization(i, n)
        rows.append(tuple(_dot(_root_realization(j, n), ei) for j in range(n)))
    return CartanData(n, tuple(rows))


def _root_realization(i: int, n: int) -> list[int]:
    v = [0] * n
    v[i % n] += 1
    v[(i + 1) % n] -= 1
    return v


def _dot(u: list[int], v: list[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


class ScalarPoly:
    """Sparse polynomial in a1..a_{n-1} with integer coefficients.

    ``nvars`` is n - 1.  Stored terms never have zero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    clean[exp] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(nvars: int, c: int) -> "ScalarPoly":
        if c == 0:
            return ScalarPoly(nvars)
        return ScalarPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(nvars: int, index: int) -> "ScalarPoly":
        """The variable a_{index}, 1-based (index in 1..nvars)."""
        if not 1 <= index <= nvars:
            raise IndexError(f"variable index {index} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[index - 1] = 1
        return ScalarPoly(nvars, {tuple(exp): 1})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "ScalarPoly") -> "ScalarPoly":
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return ScalarPoly(self.nvars, terms)

    def __sub__(self, other: "ScalarPoly") -> "ScalarPoly":
        return self + (-other)

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "ScalarPoly") -> "ScalarPoly":
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return ScalarPoly(self.nvars, terms)

    def scale(self, c: int) -> "ScalarPoly":
        return ScalarPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ScalarPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def linear_coefficients(self) -> list[int]:
        """Coefficient vector on a1..a_{nvars} of a degree-<=1 polynomial."""
        coeffs = [0] * self.nvars
        for exp, c in self.terms.items():
            s = sum(exp)
            if s == 0:
                continue
            if s != 1:
                raise DegreeError("polynomial is not of degree <= 1")
            coeffs[exp.index(1)] = c
        return coeffs

    # -- text form -----------------------------------------------------

    def __repr__(self):
        return f"ScalarPoly({self.text()})"

    def text(self) -> str:
        """Canonical text form, highest degree first, then lex exponent."""
        if not self.terms:
            return "0"
        def key(exp):
            return (-sum(exp), tuple(-e for e in exp))
        parts = []
        for exp in sorted(self.terms, key=key):
            c = self.terms[exp]
            mono = "*".join(
                f"a{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def simple_root(n: int, i: int) -> ScalarPoly:
    """The simple root alpha_i as a scalar, i in Z/n (alpha_0 eliminated)."""
    i %= n
    nvars = n - 1
    if i == 0:
        terms = {}
        for j in range(nvars):
            exp = [0] * nvars
            exp[j] = 1
            terms[tuple(exp)] = -1
        return ScalarPoly(nvars, terms)
    return ScalarPoly.variable(nvars, i)


def pairing(s: ScalarPoly, i: int) -> int:
    """Pair a degree-1 scalar against the simple coroot of node i."""
    if not s.is_homogeneous(1):
        raise DegreeError("pairing needs a homogeneous degree-1 polynomial")
    n = s.nvars + 1
    cd = cartan_matrix(n)
    coeffs = s.linear_coefficients()
    return sum(coeffs[j - 1] * cd.entry(i, j) for j in range(1, n))


def pairing_coroot(lam: ScalarPoly, root: ScalarPoly) -> int:
    """Pair degree-1 lam against the coroot of a degree-1 root.

    Simply-laced: the coroot of sum c_j alpha_j is sum c_j alpha_j^vee.
    """
    coeffs = root.linear_coefficients()
    return sum(c * pairing(lam, j + 1) for j, c in enumerate(coeffs) if c)


def reflect(i: int, s: ScalarPoly) -> ScalarPoly:
    """Apply the simple reflection of node i to a scalar.

    On degree 1 this is lam - <lam, alpha_i^vee> alpha_i; it extends to
    all of S as a ring automorphism (applied variable by variable).
    """
    n = s.nvars + 1
    i %= n
    cd = cartan_matrix(n)
    ai = simple_root(n, i)
    # image of each variable a_j
    images = []
    for j in range(1, n):
        aj = ScalarPoly.variable(s.nvars, j)
        images.append(aj - ai.scale(cd.entry(i, j)))
    result = ScalarPoly(s.nvars)
    for exp, c in s.terms.items():
        term = ScalarPoly.constant(s.nvars, c)
        for j, e in enumerate(exp):
            for _ in range(e):
                term = term * images[j]
        result = result + term
    return result


def weyl_action(word: tuple[int, ...], s: ScalarPoly) -> ScalarPoly:
    """Apply the reflections of ``word`` right-to-left (group action)."""
    for i in reversed(word):
        s = reflect(i, s)
    return s


def divided_difference(i: int, s: ScalarPoly) -> ScalarPoly:
    """(s - r_i s) / alpha_i, an exact quotient in S."""
    n = s.nvars + 1
    diff = s - reflect(i, s)
    return _divide_exact(diff, simple_root(n, i))


def _divide_exact(s: ScalarPoly, d: ScalarPoly) -> ScalarPoly:
    """Exact division by a degree-1 divisor with lex-leading coefficient +-1."""
    nvars = s.nvars
    if not d.terms:
        raise ZeroDivisionError("division by zero polynomial")
    lead = max(d.terms)  # lex order on exponent tuples
    lc = d.terms[lead]
    if abs(lc) != 1:
        raise DivisionError("divisor leading coefficient must be a unit")
    quotient: dict[tuple[int, ...], int] = {}
    rem = s
    while rem.terms:
        exp = max(rem.terms)
        if any(e < le for e, le in zip(exp, lead)):
            raise DivisionError(
                "inexact divided difference: internal invariant violated"
            )
        qexp = tuple(e - le for e, le in zip(exp, lead))
        qc = rem.terms[exp] * lc  # lc is +-1
        quotient[qexp] = quotient.get(qexp, 0) + qc
        rem = rem - ScalarPoly(nvars, {qexp: qc}) * d
    return ScalarPoly(nvars, quotient)


def phi0_scalar(s: ScalarPoly) -> int:
    """Evaluate a scalar at 0: its constant coefficient."""
    return s.constant_term()


def random_poly(rng, nvars: int, max_degree: int = 3, max_coeff: int = 5) -> ScalarPoly:
    """Random sparse polynomial for property tests."""
    terms = {}
    for exp in iter_product(range(max_degree + 1), repeat=nvars):
        if sum(exp) > max_degree:
            continue
        if rng.random() < 0.4:
            c = rng.randint(-max_coeff, max_coeff)
            if c:
                terms[exp] = c
    return ScalarPoly(nvars, terms)
