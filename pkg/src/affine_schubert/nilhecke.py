"""
Arithmetic in the affine nilHecke ring and the affine nilCoxeter algebra.

Normal form is the divided-difference basis {A_w} with all polynomial
scalars written on the LEFT.  Straightening uses
    A_i s = (r_i s) A_i + d_i(s),
and products of basis elements are decided by length additivity in window
arithmetic:
    A_u A_v = A_{uv}  if length(uv) = length(u) + length(v), else 0.
"""

from __future__ import annotations

from .cartan import (
    ScalarPoly,
    divided_difference,
    pairing_coroot,
    phi0_scalar,
    reflect,
    simple_root,
)
from .weyl import (
    AffinePermutation,
    RankMismatch,
    bruhat_covers_down,
    identity,
    reduced_word,
    simple_reflection,
)


class CapExceeded(ValueError):
    """Raised when a computation would exceed the configured length cap."""


COPRODUCT_CAP = 8


class NilCoxeterElement:
    """Integer combination of basis elements A_w."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[AffinePermutation, int] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def basis(w: AffinePermutation) -> "NilCoxeterElement":
        return NilCoxeterElement(w.n, {w: 1})

    @staticmethod
    def one(n: int) -> "NilCoxeterElement":
        return NilCoxeterElement(n, {identity(n): 1})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NilCoxeterElement(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "NilCoxeterElement":
        return NilCoxeterElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "NilCoxeterElement") -> "NilCoxeterElement":
        if self.n != other.n:
            raise RankMismatch("rank mismatch in product")
        terms: dict[AffinePermutation, int] = {}
        for u, cu in self.terms.items():
            lu = u.length()
            for v, cv in other.terms.items():
                uv = u * v
                if uv.length() == lu + v.length():
                    terms[uv] = terms.get(uv, 0) + cu * cv
        return NilCoxeterElement(self.n, terms)

    def __eq__(self, other):
        return (
            isinstance(other, NilCoxeterElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def to_nilhecke(self) -> "NilHeckeElement":
        nvars = self.n - 1
        return NilHeckeElement(
            self.n, {w: ScalarPoly.constant(nvars, c) for w, c in self.terms.items()}
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda x: (x.length(), x.window)):
            c = self.terms[w]
            body = f"A{w.text()}" if not w.is_identity() else "1"
            if abs(c) != 1 or body == "1":
                body = f"{abs(c)}*{body}" if body != "1" else str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"NilCoxeterElement({self.text()})"


class NilHeckeElement:
    """S-combination of basis elements A_w, scalars on the left."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[AffinePermutation, ScalarPoly] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def basis_element(w: AffinePermutation) -> "NilHeckeElement":
        return NilHeckeElement(w.n, {w: ScalarPoly.constant(w.n - 1, 1)})

    @staticmethod
    def one(n: int) -> "NilHeckeElement":
        return NilHeckeElement.basis_element(identity(n))

    @staticmethod
    def scalar(n: int, s: ScalarPoly) -> "NilHeckeElement":
        return NilHeckeElement(n, {identity(n): s})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return NilHeckeElement(self.n, terms)

    def __sub__(self, other):
        return self + other.scale_int(-1)

    def scale_int(self, c: int) -> "NilHeckeElement":
        return NilHeckeElement(self.n, {w: v.scale(c) for w, v in self.terms.items()})

    def scale(self, s: ScalarPoly) -> "NilHeckeElement":
        """Left multiplication by a scalar."""
        return NilHeckeElement(self.n, {w: s * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, NilHeckeElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def max_length(self) -> int:
        return max((w.length() for w in self.terms), default=0)

    def __mul__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        if self.n != other.n:
            raise RankMismatch("rank mismatch in product")
        result: dict[AffinePermutation, ScalarPoly] = {}
        for u, cu in self.terms.items():
            word = reduced_word(u)
            for w, dw in other.terms.items():
                # c_u * (A_u d_w) * A_w ; push d_w left through A_u
                if dw.degree() <= 1:
                    pushed = _push_linear(self.n, u, dw)
                else:
                    pushed = _push_scalar(self.n, word, dw)
                lw = w.length()
                for v, s in pushed.items():
                    vw = v * w
                    if vw.length() != v.length() + lw:
                        continue
                    coeff = cu * s
                    if vw in result:
                        result[vw] = result[vw] + coeff
                    else:
                        result[vw] = coeff
        return NilHeckeElement(self.n, result)

    def phi0(self) -> NilCoxeterElement:
        return NilCoxeterElement(
            self.n, {w: phi0_scalar(c) for w, c in self.terms.items()}
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda x: (x.length(), x.window)):
            c = self.terms[w]
            ctext = c.text()
            if len(c.terms) > 1:
                ctext = f"({ctext})"
            if w.is_identity():
                body = ctext
            elif ctext == "1":
                body = f"A{w.text()}"
            elif ctext == "-1":
                body = f"-A{w.text()}"
            else:
                body = f"{ctext}*A{w.text()}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NilHeckeElement({self.text()})"


def _push_scalar(
    n: int, word: tuple[int, ...], s: ScalarPoly
) -> dict[AffinePermutation, ScalarPoly]:
    """Normal form of A_word * s as a map {v: scalar} (scalars left)."""
    state = {identity(n): s}
    for i in reversed(word):
        si = simple_reflection(n, i)
        nxt: dict[AffinePermutation, ScalarPoly] = {}
        for v, c in state.items():
            siv = si * v
            if siv.length() == v.length() + 1:
                rc = reflect(i, c)
                nxt[siv] = nxt[siv] + rc if siv in nxt else rc
            dc = divided_difference(i, c)
            if not dc.is_zero():
                nxt[v] = nxt[v] + dc if v in nxt else dc
        state = {v: c for v, c in nxt.items() if not c.is_zero()}
    return state


def _push_linear(
    n: int, u: AffinePermutation, s: ScalarPoly
) -> dict[AffinePermutation, ScalarPoly]:
    """A_u * s for deg(s) <= 1 by the Chevalley rule (constants ride along)."""
    from .cartan import weyl_action

    out = {u: weyl_action(reduced_word(u), s)}
    lin = ScalarPoly(n - 1)
    for j, c in enumerate(s.linear_coefficients()):
        if c:
            lin = lin + ScalarPoly.variable(n - 1, j + 1).scale(c)
    if lin.is_zero():
        return {v: c for v, c in out.items() if not c.is_zero()}
    for v, alpha in bruhat_covers_down(u):
        c = pairing_coroot(lin, alpha)
        if c:
            cc = ScalarPoly.constant(n - 1, c)
            out[v] = out[v] + cc if v in out else cc
    return {v: c for v, c in out.items() if not c.is_zero()}


def multiply(x: NilHeckeElement, y: NilHeckeElement) -> NilHeckeElement:
    return x * y


def basis_element(w: AffinePermutation) -> NilHeckeElement:
    return NilHeckeElement.basis_element(w)


def chevalley_multiply(w: AffinePermutation, lam: ScalarPoly) -> NilHeckeElement:
    """A_w * lam for degree-1 lam via the cover formula.

    Equals (w . lam) A_w + sum over covers r_alpha w of <lam, alpha^vee>
    A_{r_alpha w}.
    """
    if not lam.is_homogeneous(1):
        from .cartan import DegreeError

        raise DegreeError("chevalley_multiply needs a degree-1 scalar")
    n = w.n
    word = reduced_word(w)
    from .cartan import weyl_action

    terms = {w: weyl_action(word, lam)}
    for v, alpha in bruhat_covers_down(w):
        c = pairing_coroot(lam, alpha)
        if c:
            terms[v] = terms.get(v, ScalarPoly(n - 1)) + ScalarPoly.constant(n - 1, c)
    return NilHeckeElement(n, terms)


def group_element(w: AffinePermutation) -> NilHeckeElement:
    """Image of w under the group embedding r_i -> 1 - alpha_i A_i."""
    n = w.n
    result = NilHeckeElement.one(n)
    for i in reduced_word(w):
        ai = simple_root(n, i)
        factor = NilHeckeElement.one(n) - NilHeckeElement.basis_element(
            simple_reflection(n, i)
        ).scale(ai)
        result = result * factor
    return result


def phi0(x: NilHeckeElement) -> NilCoxeterElement:
    return x.phi0()


def centralizes_scalars(x: NilHeckeElement) -> bool:
    """True iff x commutes with every simple root scalar."""
    n = x.n
    for j in range(n):
        aj = NilHeckeElement.scalar(n, simple_root(n, j))
        if not (x * aj - aj * x).is_zero():
            return False
    return True


def is_central_nilcoxeter(x: NilCoxeterElement) -> bool:
    """True iff x commutes with every generator A_i."""
    n = x.n
    for i in range(n):
        ai = NilCoxeterElement.basis(simple_reflection(n, i))
        if not (x * ai - ai * x).is_zero():
            return False
    return True


# -- coproduct -------------------------------------------------------------


class TensorElement:
    """S-combination of A_u (x) A_v, scalars kept as global left factors."""

    __slots__ = ("n", "terms")

    def __init__(
        self,
        n: int,
        terms: dict[tuple[AffinePermutation, AffinePermutation], ScalarPoly] | None = None,
    ):
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def one(n: int) -> "TensorElement":
        e = identity(n)
        return TensorElement(n, {(e, e): ScalarPoly.constant(n - 1, 1)})

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return TensorElement(self.n, terms)

    def __sub__(self, other):
        return self + TensorElement(
            other.n, {k: -c for k, c in other.terms.items()}
        )

    def scale(self, s: ScalarPoly) -> "TensorElement":
        return TensorElement(self.n, {k: s * c for k, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def phi0(self) -> "TensorElement":
        nvars = self.n - 1
        return TensorElement(
            self.n,
            {
                k: ScalarPoly.constant(nvars, phi0_scalar(c))
                for k, c in self.terms.items()
            },
        )

    def int_terms(self) -> dict[tuple[AffinePermutation, AffinePermutation], int]:
        """Constant-coefficient view; valid after phi0."""
        out = {}
        for k, c in self.terms.items():
            assert c.degree() <= 0
            out[k] = c.constant_term()
        return out

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        order = sorted(
            self.terms,
            key=lambda k: (k[0].length() + k[1].length(), k[0].window, k[1].window),
        )
        for u, v in order:
            c = self.terms[(u, v)]
            ctext = c.text()
            if len(c.terms) > 1:
                ctext = f"({ctext})"
            lhs = "1" if u.is_identity() else f"A{u.text()}"
            rhs = "1" if v.is_identity() else f"A{v.text()}"
            body = f"{lhs}(x){rhs}"
            if ctext == "1":
                parts.append(body)
            elif ctext == "-1":
                parts.append(f"-{body}")
            else:
                parts.append(f"{ctext}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"TensorElement({self.text()})"


def _act_generator(n: int, i: int, t: TensorElement) -> TensorElement:
    """Action of A_i on a tensor: (A_i c A_u) (x) A_v + (r_i c A_u) (x) (A_i A_v)."""
    si = simple_reflection(n, i)
    ai_si = simple_root(n, i)
    result: dict[tuple[AffinePermutation, AffinePermutation], ScalarPoly] = {}

    def add(key, s):
        if key in result:
            result[key] = result[key] + s
        else:
            result[key] = s

    for (u, v), c in t.terms.items():
        rc = reflect(i, c)
        dc = divided_difference(i, c)
        siu = si * u
        left_adds = siu.length() == u.length() + 1
        # first piece: A_i c A_u (x) A_v = [(r_i c) A_{s_i u} + d_i(c) A_u] (x) A_v
        if left_adds:
            add((siu, v), rc)
        if not dc.is_zero():
            add((u, v), dc)
        # second piece: r_i c A_u (x) A_i A_v with the group element
        # r_i = 1 - alpha_i A_i, so r_i c A_u = (r_i c)(A_u - alpha_i A_{s_i u})
        siv = si * v
        if siv.length() == v.length() + 1:
            add((u, siv), rc)
            if left_adds:
                add((siu, siv), -(rc * ai_si))
    return TensorElement(n, result)


def coproduct(x: NilHeckeElement, cap: int = COPRODUCT_CAP) -> TensorElement:
    """The coproduct, computed by acting on 1 (x) 1 along reduced words."""
    n = x.n
    if x.max_length() > cap:
        raise CapExceeded(f"coproduct cap {cap} exceeded")
    total = TensorElement(n)
    for w, c in x.terms.items():
        t = TensorElement.one(n)
        for i in reversed(reduced_word(w)):
            t = _act_generator(n, i, t)
        total = total + t.scale(c)
    return total


def tensor_phi0(t: TensorElement) -> TensorElement:
    return t.phi0()


def tensor_multiply_int(a: TensorElement, b: TensorElement) -> TensorElement:
    """Componentwise product of integer-coefficient tensors (post-phi0)."""
    n = a.n
    nvars = n - 1
    result: dict[tuple[AffinePermutation, AffinePermutation], int] = {}
    for (u1, v1), c1 in a.int_terms().items():
        x1 = NilCoxeterElement(n, {u1: 1})
        y1 = NilCoxeterElement(n, {v1: 1})
        for (u2, v2), c2 in b.int_terms().items():
            left = x1 * NilCoxeterElement(n, {u2: 1})
            right = y1 * NilCoxeterElement(n, {v2: 1})
            for lu, lc in left.terms.items():
                for rv, rc in right.terms.items():
                    key = (lu, rv)
                    result[key] = result.get(key, 0) + c1 * c2 * lc * rc
    return TensorElement(
        n, {k: ScalarPoly.constant(nvars, c) for k, c in result.items()}
    )


def equivariant_structure_constants(
    w: AffinePermutation,
    filter_pair: tuple[AffinePermutation, AffinePermutation] | None = None,
    cap: int = COPRODUCT_CAP,
) -> dict[tuple[AffinePermutation, AffinePermutation], ScalarPoly]:
    """The coefficients of A_u (x) A_v in the coproduct of A_w."""
    if w.length() > cap:
        raise CapExceeded(f"structure-constant cap {cap} exceeded")
    delta = coproduct(NilHeckeElement.basis_element(w), cap=cap)
    if filter_pair is not None:
        c = delta.terms.get(filter_pair, ScalarPoly(w.n - 1))
        return {filter_pair: c}
    return dict(delta.terms)
