"""
The affine symmetric group in window notation.

An element is an n-periodic bijection w of Z with w(i + n) = w(i) + n,
stored by its window (w(1), ..., w(n)).  The residues of the window are a
permutation of 0..n-1 and the window entries sum to n(n+1)/2, so products,
inverses and length are all O(n) or O(n^2) window arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import ScalarPoly, simple_root, weyl_action


class RankMismatch(ValueError):
    """Raised when combining elements of different rank."""


class NotGrassmannian(ValueError):
    """Raised when a coset-minimal element is required."""


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if len(self.window) != n:
            raise ValueError("window must have length n")
        if sorted(v % n for v in self.window) != list(range(n)):
            raise ValueError("window residues must be a permutation of 0..n-1")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError("window entries must sum to n(n+1)/2")

    # -- function on Z -------------------------------------------------

    def value(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        """Composition: (u*v)(i) = u(v(i))."""
        if self.n != other.n:
            raise RankMismatch("rank mismatch in product")
        n, win = self.n, self.window
        out = []
        for v in other.window:
            q, r = divmod(v - 1, n)
            out.append(win[r] + q * n)
        return AffinePermutation(n, tuple(out))

    def inverse(self) -> "AffinePermutation":
        window = [0] * self.n
        for i in range(1, self.n + 1):
            v = self.value(i)
            q, r = divmod(v - 1, self.n)
            window[r] = i - q * self.n
        return AffinePermutation(self.n, tuple(window))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    # -- length and descents --------------------------------------------

    def length(self) -> int:
        """Number of affine inversions over one fundamental window."""
        return _length(self.n, self.window)

    def has_left_descent(self, i: int) -> bool:
        """True iff length(s_i * self) < length(self)."""
        # i is a left descent iff self^{-1}(i) > self^{-1}(i+1) as values
        inv = self.inverse()
        return inv.value(i) > inv.value(i + 1)

    def is_grassmannian(self) -> bool:
        return all(self.window[i] < self.window[i + 1] for i in range(self.n - 1))

    # -- finite/translation decomposition --------------------------------

    def finite_and_coroot(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Write self = u * t_lambda: (u one-line on 1..n, lambda)."""
        u, lam = [], []
        for i in range(1, self.n + 1):
            v = self.value(i)
            r = (v - 1) % self.n + 1
            u.append(r)
            lam.append((v - r) // self.n)
        return tuple(u), tuple(lam)

    # -- text form -------------------------------------------------------

    def text(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def __repr__(self):
        return f"AffinePermutation({self.n}, {self.window})"


@lru_cache(maxsize=None)
def _length(n: int, window: tuple[int, ...]) -> int:
    total = 0
    for a in range(n):
        wa = window[a]
        for b in range(a + 1, a + n):
            q, r = divmod(b, n)
            d = wa - (window[r] + q * n)
            if d > 0:
                total += -(-d // n)  # ceil(d / n)
    return total


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def simple_reflection(n: int, i: int) -> AffinePermutation:
    """s_i swaps the residue classes of i and i+1 mod n."""
    i %= n
    window = []
    for j in range(1, n + 1):
        if j % n == i % n:
            window.append(j + 1)
        elif j % n == (i + 1) % n:
            window.append(j - 1)
        else:
            window.append(j)
    return AffinePermutation(n, tuple(window))


def from_word(n: int, word: tuple[int, ...]) -> AffinePermutation:
    """Product r_{i_1} ... r_{i_l} of simple generators."""
    w = identity(n)
    for i in word:
        w = w * simple_reflection(n, i)
    return w


@lru_cache(maxsize=None)
def reduced_word(w: AffinePermutation) -> tuple[int, ...]:
    """A reduced word for w, by greedy left-descent stripping."""
    word = []
    cur = w
    ell = cur.length()
    while ell > 0:
        for i in range(cur.n):
            v = simple_reflection(cur.n, i) * cur
            lv = v.length()
            if lv < ell:
                word.append(i)
                cur, ell = v, lv
                break
        else:  # pragma: no cover
            raise AssertionError("non-identity element with no descent")
    return tuple(word)


def translation(lam: tuple[int, ...]) -> AffinePermutation:
    """The translation by a coroot vector: w(i) = i + n*lambda_i."""
    n = len(lam)
    if sum(lam) != 0:
        raise ValueError("coroot vector entries must sum to 0")
    return AffinePermutation(n, tuple(i + n * lam[i - 1] for i in range(1, n + 1)))


def length_via_formula(w_fin: tuple[int, ...], lam: tuple[int, ...]) -> int:
    """Independent length oracle for the element w_fin * t_lambda.

    Sums |<lambda, alpha> + chi(w_fin . alpha)| over the finite positive
    roots e_i - e_j (i < j), with chi = 0 on positive roots and 1 otherwise.
    """
    n = len(lam)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            chi = 0 if w_fin[i] < w_fin[j] else 1
            total += abs(lam[i] - lam[j] + chi)
    return total


def bruhat_covers_down(
    w: AffinePermutation,
) -> list[tuple[AffinePermutation, ScalarPoly]]:
    """All covers v = r_alpha w below w in strong Bruhat order.

    Returns (v, alpha) with alpha the positive affine root of the
    reflection, recorded by its level-zero scalar image (the classical
    part, which carries the coroot pairing).
    """
    return list(_bruhat_covers_cached(w))


@lru_cache(maxsize=None)
def _bruhat_covers_cached(
    w: AffinePermutation,
) -> tuple[tuple[AffinePermutation, ScalarPoly], ...]:
    word = reduced_word(w)
    n = w.n
    ell = len(word)
    covers: dict[tuple[int, ...], tuple[AffinePermutation, ScalarPoly]] = {}
    for j in range(ell):
        sub = word[:j] + word[j + 1:]
        v = from_word(n, sub)
        if v.length() != ell - 1:
            continue
        # v = w r_beta with beta = s_{i_l}...s_{i_{j+1}} alpha_{i_j}; this is
        # the root whose coroot appears in A_w s = (w.s) A_w + sum <s,beta^> A_v
        alpha = weyl_action(tuple(reversed(word[j + 1 :])), simple_root(n, word[j]))
        prev = covers.get(v.window)
        if prev is not None:
            assert prev[1] == alpha, "duplicate cover with conflicting root"
        covers[v.window] = (v, alpha)
    return tuple(covers.values())


def translations_act_trivially(word: tuple[int, ...], s: ScalarPoly) -> ScalarPoly:
    """Apply the Weyl action along a word (level zero); see cartan module."""
    return weyl_action(word, s)


# -- Grassmannian <-> partition code bijection ---------------------------


def partition_word(n: int, parts: tuple[int, ...]) -> tuple[int, ...]:
    """Reduced word of the Grassmannian element labelled by a partition.

    Box (i, j) of the diagram carries residue (j - i) mod n; the word
    reads rows bottom to top, each row right to left.
    """
    word = []
    for i in range(len(parts), 0, -1):
        for j in range(parts[i - 1], 0, -1):
            word.append((j - i) % n)
    return tuple(word)


def grassmannian_to_partition(w: AffinePermutation) -> tuple[int, ...]:
    """Partition label of a Grassmannian element (degree-preserving).

    The convention is pinned by the leading-monomial property of the
    affine Stanley function of w; the kschur module asserts it.
    """
    if not w.is_grassmannian():
        raise NotGrassmannian(f"{w.text()} is not Grassmannian")
    return _partition_table(w.n, w.length())[w.window]


@lru_cache(maxsize=None)
def _partition_table(n: int, d: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    table = {}
    from .symfunc import partitions

    for parts in partitions(d, n - 1):
        w = from_word(n, partition_word(n, parts))
        assert w.is_grassmannian() and w.length() == d, (
            "partition reading word is not Grassmannian-reduced"
        )
        assert w.window not in table
        table[w.window] = parts
    return table


@lru_cache(maxsize=None)
def grassmannians_by_length(n: int, max_length: int) -> tuple[tuple[AffinePermutation, ...], ...]:
    """All Grassmannian elements of each length 0..max_length.

    BFS in left weak order; the Grassmannian set is a lower ideal there.
    """
    levels = [(identity(n),)]
    for ell in range(1, max_length + 1):
        seen: dict[tuple[int, ...], AffinePermutation] = {}
        for w in levels[ell - 1]:
            for i in range(n):
                v = simple_reflection(n, i) * w
                if v.length() == ell and v.is_grassmannian():
                    seen[v.window] = v
        levels.append(tuple(sorted(seen.values(), key=lambda x: x.window)))
    return tuple(levels)


@lru_cache(maxsize=None)
def elements_by_length(n: int, max_length: int) -> tuple[tuple[AffinePermutation, ...], ...]:
    """All affine permutations of each length 0..max_length (BFS)."""
    levels = [(identity(n),)]
    for ell in range(1, max_length + 1):
        seen: dict[tuple[int, ...], AffinePermutation] = {}
        for w in levels[ell - 1]:
            for i in range(n):
                v = simple_reflection(n, i) * w
                if v.length() == ell:
                    seen[v.window] = v
        levels.append(tuple(sorted(seen.values(), key=lambda x: x.window)))
    return tuple(levels)


def partition_to_grassmannian(n: int, parts: tuple[int, ...]) -> AffinePermutation:
    """Inverse of the code bijection, for partitions with parts < n."""
    parts = tuple(sorted((p for p in parts if p), reverse=True))
    if any(p >= n for p in parts):
        raise ValueError(f"parts must be < n = {n}")
    return from_word(n, partition_word(n, parts))


def orbit_cosets(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The orbit of lam under coordinate permutations, one per coset."""
    from itertools import permutations

    return sorted(set(permutations(lam)), reverse=True)


# -- text parsing for the CLI ---------------------------------------------


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a word like "s1 s0 s2" (empty string = identity)."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for token in text.split():
        if not token.startswith("s") or not token[1:].isdigit():
            raise ValueError(f"bad word token {token!r}; expected like 's0'")
        out.append(int(token[1:]))
    return tuple(out)


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a partition like "(2,1)" or "()"."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text.strip():
        return ()
    parts = tuple(int(tok) for tok in text.split(","))
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def partition_text(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"
