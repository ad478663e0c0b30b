"""
Cyclically decreasing elements, affine Stanley / affine Schur functions,
k-Schur functions and their non-commutative images.

Everything lives in a KEnv, which fixes the rank n (so k = n - 1) and a
degree cap, and caches the expensive pieces: the h elements, their
iterated products applied to 1, and the per-degree transition matrices
between affine Schur functions and monomials.

Two independent routes compute the same objects and are checked against
each other:

  * the symmetric-function route (dual basis to the affine Schur
    functions under the Hall pairing, pushed through h_i -> h_i), and
  * a pure linear-algebra route that solves for the unique element of
    the subalgebra B' with a prescribed single Grassmannian term.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .cartan import ScalarPoly, simple_root
from .nilhecke import (
    NilCoxeterElement,
    NilHeckeElement,
    is_central_nilcoxeter,
)
from .symfunc import SymFunc, multiply as sym_multiply, partitions, project_quotient_n
from .weyl import (
    AffinePermutation,
    from_word,
    grassmannian_to_partition,
    grassmannians_by_length,
    elements_by_length,
    identity,
    orbit_cosets,
    translation,
)


class ConventionViolation(AssertionError):
    """The affine Schur matrix failed the pinned unitriangularity."""


class TheoremViolation(AssertionError):
    """An identity the implementation relies on failed to hold."""


class CapExceeded(ValueError):
    pass


def cyclically_decreasing_word(n: int, nodes: frozenset | set) -> tuple[int, ...]:
    """A word on the subset in which letter i+1 (mod n) precedes letter i.

    Decomposes the subset into maximal cyclic runs and writes each run
    top-down; runs commute, so any valid linear extension gives the same
    group element.
    """
    nodes = {i % n for i in nodes}
    if len(nodes) >= n:
        raise ValueError("subset must be proper (size <= n-1)")
    word: list[int] = []
    remaining = set(nodes)
    while remaining:
        start = next(iter(remaining))
        # walk down to the bottom of the run containing start
        while (start - 1) % n in remaining:
            start = (start - 1) % n
        run = [start]
        while (run[-1] + 1) % n in remaining:
            run.append((run[-1] + 1) % n)
        word.extend(reversed(run))
        remaining -= set(run)
    return tuple(word)


class KEnv:
    """Rank-n environment with caches; k = n - 1."""

    def __init__(self, n: int, max_degree: int = 8):
        if n < 2:
            raise ValueError("rank parameter must be >= 2")
        self.n = n
        self.k = n - 1
        self.max_degree = max_degree
        self._h_products: dict[tuple[int, ...], NilCoxeterElement] = {}
        self._h_elements: dict[int, NilCoxeterElement] = {}
        self._stanley_cache: dict[int, tuple] = {}
        self._kschur_cache: dict[int, dict] = {}

    # -- h elements ---------------------------------------------------------

    def h_element(self, i: int) -> NilCoxeterElement:
        """Sum of A_I over all size-i subsets I of Z/n; h_0 = 1."""
        if i in self._h_elements:
            return self._h_elements[i]
        n = self.n
        if not 0 <= i <= n - 1:
            raise ValueError(f"h index must be in 0..{n - 1}")
        terms: dict[AffinePermutation, int] = {}
        for subset in combinations(range(n), i):
            w = from_word(n, cyclically_decreasing_word(n, set(subset)))
            assert w.length() == i, "cyclically decreasing word not reduced"
            terms[w] = terms.get(w, 0) + 1
        elem = NilCoxeterElement(n, terms)
        self._h_elements[i] = elem
        return elem

    def h_product(self, parts: tuple[int, ...]) -> NilCoxeterElement:
        """The product h_{parts[0]} ... h_{parts[-1]} applied to 1."""
        parts = tuple(parts)
        if not parts:
            return NilCoxeterElement.one(self.n)
        if parts in self._h_products:
            return self._h_products[parts]
        result = self.h_product(parts[:-1]) * self.h_element(parts[-1])
        self._h_products[parts] = result
        return result

    # -- affine Stanley functions --------------------------------------------

    def affine_stanley(self, w: AffinePermutation) -> SymFunc:
        """Affine Stanley function of w in the monomial basis.

        The coefficient of m_lambda is the A_w-coefficient of the product
        of h elements indexed by lambda (symmetry makes composition
        coefficients redundant; it is verified separately).
        """
        d = w.length()
        if d > self.max_degree:
            raise CapExceeded(f"length {d} exceeds cap {self.max_degree}")
        terms = {}
        for lam in partitions(d, self.k):
            c = self.h_product(lam).terms.get(w, 0)
            if c:
                terms[lam] = c
        return SymFunc("m", terms)

    def composition_coefficient(self, w: AffinePermutation, comp: tuple[int, ...]) -> int:
        """Coefficient read from the iterated h action for one composition."""
        if any(not 0 <= a <= self.k for a in comp):
            return 0
        elem = NilCoxeterElement.one(self.n)
        for a in comp:
            elem = elem * self.h_element(a)
        return elem.terms.get(w, 0)

    # -- transition matrix and k-Schur functions ------------------------------

    def stanley_data(self, d: int):
        """(grassmannians of length d, partitions of d, matrix M).

        M[w-index][lambda-index] is the m_lambda coefficient of the affine
        Schur function of w.  Unitriangularity under the code bijection is
        asserted, with m_{lambda(w)} the leading monomial.
        """
        if d in self._stanley_cache:
            return self._stanley_cache[d]
        if d > self.max_degree:
            raise CapExceeded(f"degree {d} exceeds cap {self.max_degree}")
        ws = list(grassmannians_by_length(self.n, d)[d])
        lams = list(partitions(d, self.k))
        if len(ws) != len(lams):
            raise ConventionViolation(
                f"{len(ws)} Grassmannians vs {len(lams)} partitions at degree {d}"
            )
        lam_idx = {lam: j for j, lam in enumerate(lams)}
        # order rows to match columns through the code bijection
        ws.sort(key=lambda w: lam_idx[grassmannian_to_partition(w)])
        mat = []
        for w in ws:
            f = self.affine_stanley(w)
            row = [f.terms.get(lam, 0) for lam in lams]
            mat.append(row)
        for i, w in enumerate(ws):
            lam_w = grassmannian_to_partition(w)
            if mat[i][lam_idx[lam_w]] != 1:
                raise ConventionViolation(
                    f"affine Schur of {w.text()} has m_{lam_w} coefficient "
                    f"{mat[i][lam_idx[lam_w]]}, expected 1"
                )
            for lam, j in lam_idx.items():
                if mat[i][j] and not _dominates(lam_w, lam):
                    raise ConventionViolation(
                        f"affine Schur of {w.text()} has monomial {lam} "
                        f"not dominated by its label {lam_w}"
                    )
        data = (ws, lams, mat)
        self._stanley_cache[d] = data
        return data

    def kschur_in_h(self, d: int) -> dict[AffinePermutation, SymFunc]:
        """The degree-d dual basis in the h basis: C with C M^T = I."""
        if d in self._kschur_cache:
            return self._kschur_cache[d]
        ws, lams, mat = self.stanley_data(d)
        kdim = len(ws)
        inv = _invert_integer_matrix(mat)  # rows of inv: M^{-1}
        # s_w = sum_lam C[w][lam] h_lam with sum_lam C[w][lam] M[v][lam] = delta
        # so C = (M^{-1})^T: C[w][lam] = inv[lam][w]
        out = {}
        for i, w in enumerate(ws):
            terms = {}
            for j, lam in enumerate(lams):
                v = inv[j][i]
                if v:
                    terms[lam] = v
            out[w] = SymFunc("h", terms)
        self._kschur_cache[d] = out
        return out

    def kschur_function(self, w: AffinePermutation) -> SymFunc:
        if not w.is_grassmannian():
            from .weyl import NotGrassmannian

            raise NotGrassmannian(f"{w.text()} is not Grassmannian")
        return self.kschur_in_h(w.length())[w]

    def noncommutative_kschur(self, w: AffinePermutation) -> NilCoxeterElement:
        """Image of the degree-l(w) dual basis element under h_i -> h_i."""
        f = self.kschur_function(w)
        total = NilCoxeterElement(self.n)
        for lam, c in f.terms.items():
            total = total + self.h_product(lam).scale(c)
        return total

    # -- b coefficients (two routes) ------------------------------------------

    def b_coefficients(self, v: AffinePermutation) -> dict[AffinePermutation, int]:
        """Expansion coefficients of the affine Stanley function of v in the
        affine Schur basis; cross-checked against the A_v-coefficients of
        the non-commutative dual basis elements.
        """
        d = v.length()
        ws, lams, mat = self.stanley_data(d)
        # route 2: solve the unitriangular system M^T b = (m-coefficients of F_v)
        fv = project_quotient_n(self.affine_stanley(v), self.n)
        rhs = [Fraction(fv.terms.get(lam, 0)) for lam in lams]
        sol = _solve_square(
            [[Fraction(mat[i][j]) for i in range(len(ws))] for j in range(len(lams))],
            rhs,
        )
        route2 = {}
        for i, w in enumerate(ws):
            assert sol[i].denominator == 1
            if sol[i]:
                route2[w] = int(sol[i])
        # route 1: read the A_v coefficient off each non-commutative element
        route1 = {}
        for w in ws:
            c = self.noncommutative_kschur(w).terms.get(v, 0)
            if c:
                route1[w] = c
        if route1 != route2:
            raise TheoremViolation(
                f"b-coefficient routes disagree at v = {v.text()}: "
                f"{route1} vs {route2}"
            )
        return route2

    # -- the B' characterization ----------------------------------------------

    def in_B_prime(self, b: NilCoxeterElement) -> bool:
        """Membership in the subalgebra of elements with phi0(b s)=phi0(s) b.

        Checking the n degree-1 generators suffices: any constant-term-free
        scalar is generated by them, and pushing one generator at a time
        keeps a strictly positive-degree scalar on every discarded term.
        """
        bh = b.to_nilhecke()
        for j in range(self.n):
            aj = NilHeckeElement.scalar(self.n, simple_root(self.n, j))
            if not (bh * aj).phi0().is_zero():
                return False
        return True

    def bprime_leading_solve(self, w: AffinePermutation) -> NilCoxeterElement:
        """The unique B' element with single Grassmannian term A_w.

        Solves an integer linear system over the span of all A_v with
        l(v) = l(w); fully independent of the symmetric-function route.
        """
        d = w.length()
        if d > self.max_degree:
            raise CapExceeded(f"length {d} exceeds cap {self.max_degree}")
        vs = list(elements_by_length(self.n, d)[d])
        v_idx = {v: i for i, v in enumerate(vs)}
        grass = set(grassmannians_by_length(self.n, d)[d])
        if w not in grass:
            from .weyl import NotGrassmannian

            raise NotGrassmannian(f"{w.text()} is not Grassmannian")
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        # phi0((sum c_v A_v) alpha_j) = 0, coefficientwise over length d-1
        from .weyl import bruhat_covers_down
        from .cartan import pairing_coroot

        for j in range(self.n):
            aj = simple_root(self.n, j)
            coeff_rows: dict[AffinePermutation, list[Fraction]] = {}
            for v, i in v_idx.items():
                for u, alpha in bruhat_covers_down(v):
                    c = pairing_coroot(aj, alpha)
                    if c:
                        row = coeff_rows.setdefault(u, [Fraction(0)] * len(vs))
                        row[i] += c
            for row in coeff_rows.values():
                rows.append(row)
                rhs.append(Fraction(0))
        for g in grass:
            row = [Fraction(0)] * len(vs)
            row[v_idx[g]] = Fraction(1)
            rows.append(row)
            rhs.append(Fraction(1 if g == w else 0))
        sol = _solve_unique(rows, rhs)
        if sol is None:
            raise TheoremViolation(
                f"no unique B' element with leading term A_{w.text()}"
            )
        terms = {}
        for v, i in v_idx.items():
            if sol[i]:
                assert sol[i].denominator == 1
                terms[v] = int(sol[i])
        return NilCoxeterElement(self.n, terms)

    # -- involutions and products ----------------------------------------------

    def omega_bar(self, b: NilCoxeterElement) -> NilCoxeterElement:
        """Relabel every generator i -> n - i (mod n) and renormalize."""
        from .weyl import reduced_word

        total = NilCoxeterElement(self.n)
        for w, c in b.terms.items():
            word = tuple((self.n - i) % self.n for i in reduced_word(w))
            img = from_word(self.n, word)
            assert img.length() == w.length()
            total = total + NilCoxeterElement(self.n, {img: c})
        return total

    def kschur_product(
        self, u: AffinePermutation, v: AffinePermutation
    ) -> dict[AffinePermutation, int]:
        """Structure constants of the dual basis under multiplication."""
        d = u.length() + v.length()
        if d > self.max_degree:
            raise CapExceeded(f"total degree {d} exceeds cap {self.max_degree}")
        prod = sym_multiply(self.kschur_function(u), self.kschur_function(v))
        out = {}
        from .symfunc import hall_pairing

        for w in grassmannians_by_length(self.n, d)[d]:
            c = hall_pairing(prod, self.affine_stanley(w))
            if c:
                out[w] = c
        return out

    def affine_schur_product(
        self, u: AffinePermutation, v: AffinePermutation
    ) -> dict[AffinePermutation, int]:
        """Expansion of a product of affine Schur functions in that basis."""
        d = u.length() + v.length()
        if d > self.max_degree:
            raise CapExceeded(f"total degree {d} exceeds cap {self.max_degree}")
        prod = project_quotient_n(
            sym_multiply(self.affine_stanley(u), self.affine_stanley(v)), self.n
        )
        ws, lams, mat = self.stanley_data(d)
        rhs = [Fraction(prod.terms.get(lam, 0)) for lam in lams]
        sol = _solve_square(
            [[Fraction(mat[i][j]) for i in range(len(ws))] for j in range(len(lams))],
            rhs,
        )
        out = {}
        for i, w in enumerate(ws):
            assert sol[i].denominator == 1
            if sol[i]:
                out[w] = int(sol[i])
        return out

    def orbit_sum(self, lam: tuple[int, ...]) -> NilCoxeterElement:
        """Sum of A_{t_mu} over the orbit of lam (one mu per coset)."""
        if len(lam) != self.n:
            raise ValueError("coroot vector length must equal n")
        terms = {}
        for mu in orbit_cosets(lam):
            terms[translation(mu)] = 1
        return NilCoxeterElement(self.n, terms)

    def orbit_sum_is_central(self, lam: tuple[int, ...]) -> bool:
        return is_central_nilcoxeter(self.orbit_sum(lam))


def _dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True iff lam >= mu in dominance order (same size)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _invert_integer_matrix(mat: list[list[int]]) -> list[list[int]]:
    k = len(mat)
    from .symfunc import _invert_fraction_matrix

    inv = _invert_fraction_matrix([[Fraction(x) for x in row] for row in mat])
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row), "matrix must invert over Z"
        out.append([int(x) for x in row])
    return out


def _solve_square(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system by Gaussian elimination."""
    k = len(mat)
    aug = [mat[i][:] + [rhs[i]] for i in range(k)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][k] for i in range(k)]


def _solve_unique(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Solve a possibly overdetermined system; None unless exactly one
    solution exists."""
    m = len(rows)
    if m == 0:
        return None
    ncols = len(rows[0])
    aug = [rows[i][:] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    # consistency
    for i in range(r, m):
        if aug[i][ncols] != 0:
            return None
    if len(pivots) < ncols:
        return None  # underdetermined
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = aug[i][ncols]
    return sol
