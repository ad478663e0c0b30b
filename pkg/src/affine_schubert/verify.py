"""
Named identity checks over the whole library.

Each check returns a CheckResult; a counterexample, when present, is a
plain JSON-serializable dict.  The CLI groups these into suites, and the
acceptance tests call them directly with pinned parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cartan import (
    ScalarPoly,
    divided_difference,
    phi0_scalar,
    random_poly,
    simple_root,
)
from .kschur import KEnv
from .nilhecke import (
    NilCoxeterElement,
    NilHeckeElement,
    TensorElement,
    centralizes_scalars,
    coproduct,
    group_element,
    tensor_multiply_int,
    tensor_phi0,
)
from .symfunc import hall_pairing
from .weyl import (
    elements_by_length,
    from_word,
    grassmannians_by_length,
    identity,
    partition_to_grassmannian,
    reduced_word,
    translation,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: dict | None = field(default=None)

    def as_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _env(n: int, max_degree: int = 8) -> KEnv:
    return KEnv(n, max_degree=max_degree)


# -- the length-3 worked example at n=3 -------------------------------------

# (word of w, h-expansion, list of words of the A-terms); all coefficients 1
EXAMPLE_N3 = [
    ((), {(): 1}, [()]),
    ((0,), {(1,): 1}, [(0,), (1,), (2,)]),
    ((1, 0), {(2,): 1}, [(0, 2), (2, 1), (1, 0)]),
    ((2, 0), {(1, 1): 1, (2,): -1}, [(2, 0), (1, 2), (0, 1)]),
    (
        (2, 1, 0),
        {(2, 1): 1},
        [(0, 2, 1), (0, 1, 0), (1, 0, 2), (1, 2, 1), (2, 0, 2), (2, 1, 0)],
    ),
    (
        (1, 2, 0),
        {(1, 1, 1): 1, (2, 1): -1},
        [(1, 2, 0), (0, 1, 0), (2, 0, 1), (1, 2, 1), (2, 0, 2), (0, 1, 2)],
    ),
]


def check_example_expansions() -> CheckResult:
    """The six dual-basis expansions at n=3, in the h basis and A basis."""
    env = _env(3)
    for word, h_terms, a_words in EXAMPLE_N3:
        w = from_word(3, word)
        got_h = env.kschur_function(w).terms
        if got_h != h_terms:
            return CheckResult(
                "example_expansions",
                False,
                {"w": w.text(), "expected_h": str(h_terms), "got_h": str(got_h)},
            )
        want_a = {from_word(3, aw): 1 for aw in a_words}
        got_a = env.noncommutative_kschur(w).terms
        if got_a != want_a:
            return CheckResult(
                "example_expansions",
                False,
                {"w": w.text(), "got_A": str({k.text(): v for k, v in got_a.items()})},
            )
    return CheckResult("example_expansions", True)


def check_annihilation(n: int, rng: random.Random | None = None) -> CheckResult:
    """phi0(h_i alpha_j) = 0 and phi0(h_i s) = phi0(s) h_i."""
    env = _env(n)
    for i in range(1, n):
        hi = env.h_element(i).to_nilhecke()
        for j in range(n):
            aj = NilHeckeElement.scalar(n, simple_root(n, j))
            if not (hi * aj).phi0().is_zero():
                return CheckResult(
                    "annihilation", False, {"n": n, "i": i, "j": j}
                )
    if rng is not None:
        for i in range(1, n):
            hi = env.h_element(i)
            for _ in range(5):
                s = random_poly(rng, n - 1, max_degree=3)
                lhs = (hi.to_nilhecke() * NilHeckeElement.scalar(n, s)).phi0()
                if lhs != hi.scale(phi0_scalar(s)):
                    return CheckResult(
                        "annihilation", False, {"n": n, "i": i, "s": s.text()}
                    )
    return CheckResult("annihilation", True)


def check_commutativity(n: int) -> CheckResult:
    """h_i h_j = h_j h_i for all pairs."""
    env = _env(n)
    hs = [env.h_element(i) for i in range(1, n)]
    for i, hi in enumerate(hs):
        for hj in hs[i + 1 :]:
            if hi * hj != hj * hi:
                return CheckResult(
                    "commutativity", False, {"n": n, "i": i + 1, "j": hs.index(hj) + 1}
                )
    return CheckResult("commutativity", True)


def _h_tensor(env: KEnv, i: int, j: int) -> TensorElement:
    n = env.n
    out: dict = {}
    for u, cu in env.h_element(i).terms.items():
        for v, cv in env.h_element(j).terms.items():
            out[(u, v)] = ScalarPoly.constant(n - 1, cu * cv)
    return TensorElement(n, out)


def _delta_b_of_h(env: KEnv, i: int) -> TensorElement:
    total = TensorElement(env.n)
    for j in range(i + 1):
        total = total + _h_tensor(env, j, i - j)
    return total


def check_coproduct_h(n: int) -> CheckResult:
    """tensor_phi0(Delta(h_i)) = sum_j h_j (x) h_{i-j}."""
    env = _env(n)
    for i in range(1, n):
        got = tensor_phi0(coproduct(env.h_element(i).to_nilhecke()))
        if got != _delta_b_of_h(env, i):
            return CheckResult("coproduct_h", False, {"n": n, "i": i})
    return CheckResult("coproduct_h", True)


def check_coproduct_multiplicative(n: int, cap: int = 6) -> CheckResult:
    """Delta(h_i h_j) agrees with the product of the h-coproducts."""
    env = _env(n)
    for i in range(1, n):
        for j in range(i, n):
            if i + j > cap:
                continue
            prod = env.h_element(i) * env.h_element(j)
            lhs = tensor_phi0(coproduct(prod.to_nilhecke()))
            rhs = tensor_multiply_int(_delta_b_of_h(env, i), _delta_b_of_h(env, j))
            if lhs != rhs:
                return CheckResult(
                    "coproduct_multiplicative", False, {"n": n, "i": i, "j": j}
                )
    return CheckResult("coproduct_multiplicative", True)


def check_duality(n: int, cap: int) -> CheckResult:
    """<s_w, F_v> = delta_{wv} on Grassmannians of equal length."""
    env = _env(n, max_degree=max(cap, 8))
    for d in range(cap + 1):
        ws = grassmannians_by_length(n, cap)[d]
        for w in ws:
            sw = env.kschur_function(w)
            for v in ws:
                got = hall_pairing(sw, env.affine_stanley(v))
                if got != (1 if v == w else 0):
                    return CheckResult(
                        "duality",
                        False,
                        {"n": n, "w": w.text(), "v": v.text(), "pairing": got},
                    )
    return CheckResult("duality", True)


def check_dual_routes(n: int, cap: int) -> CheckResult:
    """noncommutative_kschur and the B'-solver produce identical elements."""
    env = _env(n, max_degree=max(cap, 8))
    for d in range(cap + 1):
        for w in grassmannians_by_length(n, cap)[d]:
            a = env.noncommutative_kschur(w)
            b = env.bprime_leading_solve(w)
            if a != b:
                return CheckResult(
                    "dual_routes",
                    False,
                    {"n": n, "w": w.text(), "sym": a.text(), "solver": b.text()},
                )
    return CheckResult("dual_routes", True)


def check_positivity(n: int, cap: int) -> CheckResult:
    """b_{w,v} >= 0 and both product expansions have coefficients >= 0."""
    env = _env(n, max_degree=max(cap, 8))
    for d in range(cap + 1):
        for v in elements_by_length(n, cap)[d]:
            for w, c in env.b_coefficients(v).items():
                if c < 0:
                    return CheckResult(
                        "positivity",
                        False,
                        {"kind": "b", "n": n, "w": w.text(), "v": v.text(), "c": c},
                    )
    grass = grassmannians_by_length(n, cap)
    for du in range(cap + 1):
        for dv in range(cap + 1 - du):
            for u in grass[du]:
                for v in grass[dv]:
                    for kind, table in (
                        ("homology", env.kschur_product(u, v)),
                        ("cohomology", env.affine_schur_product(u, v)),
                    ):
                        for w, c in table.items():
                            if c < 0:
                                return CheckResult(
                                    "positivity",
                                    False,
                                    {
                                        "kind": kind,
                                        "n": n,
                                        "u": u.text(),
                                        "v": v.text(),
                                        "w": w.text(),
                                        "c": c,
                                    },
                                )
    return CheckResult("positivity", True)


def _antidominant_translations(n: int, length_cap: int):
    """Antidominant coroot vectors lam with l(t_lam) <= length_cap."""
    out = []
    bound = length_cap + 1

    def rec(prefix, total):
        if len(prefix) == n:
            if total == 0:
                lam = tuple(prefix)
                if translation(lam).length() <= length_cap:
                    out.append(lam)
            return
        lo = prefix[-1] if prefix else -bound
        for v in range(lo, bound + 1):
            rec(prefix + [v], total + v)

    rec([], 0)
    return [lam for lam in out if any(lam)]


def check_factorization(n: int, t_cap: int = 4, total_cap: int = 7) -> CheckResult:
    """s_{t_lam} s_x = s_{x t_lam} for antidominant lam, Grassmannian x."""
    env = _env(n, max_degree=total_cap)
    for lam in _antidominant_translations(n, t_cap):
        t = translation(lam)
        if not t.is_grassmannian():
            return CheckResult(
                "factorization", False, {"n": n, "lam": list(lam), "why": "t not Grassmannian"}
            )
        dt = t.length()
        for dx in range(total_cap - dt + 1):
            for x in grassmannians_by_length(n, total_cap - dt)[dx]:
                got = env.kschur_product(t, x)
                if got != {x * t: 1}:
                    return CheckResult(
                        "factorization",
                        False,
                        {
                            "n": n,
                            "lam": list(lam),
                            "x": x.text(),
                            "got": {w.text(): c for w, c in got.items()},
                        },
                    )
    return CheckResult("factorization", True)


def _coroot_vectors(n: int, bound: int):
    """Coroot vectors with entries in [-bound, bound], up to reordering.

    Conjugating by a permutation w sends t_lam to t_{w.lam} and preserves
    both centrality and commuting with scalars, so one representative per
    multiset decides every vector in the box.
    """
    out = []

    def rec(prefix, total):
        if len(prefix) == n:
            if total == 0 and any(prefix):
                out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else -bound
        for v in range(lo, bound + 1):
            rec(prefix + [v], total + v)

    rec([], 0)
    return out


def check_center(n: int, bound: int = 2) -> CheckResult:
    """Orbit sums are central; translation images commute with scalars."""
    env = _env(n)
    for lam in _coroot_vectors(n, bound):
        if not env.orbit_sum_is_central(lam):
            return CheckResult(
                "center", False, {"n": n, "lam": list(lam), "failed": "orbit_sum"}
            )
        g = group_element(translation(lam))
        if not centralizes_scalars(g):
            return CheckResult(
                "center", False, {"n": n, "lam": list(lam), "failed": "group_element"}
            )
    return CheckResult("center", True)


def _random_reduced_words(w, rng, count=4):
    """A few reduced words of w found by randomized descent stripping."""
    words = {reduced_word(w)}
    n = w.n
    for _ in range(count * 3):
        word = []
        v = w
        while not v.is_identity():
            descents = [i for i in range(n) if v.has_left_descent(i)]
            i = rng.choice(descents)
            word.append(i)
            v = from_word(n, (i,)) * v
        words.add(tuple(word))
        if len(words) >= count:
            break
    return words


def check_well_defined(
    n: int, cap: int, seed: int = 20260826, divisions: int = 1000
) -> CheckResult:
    """Reduced-word independence, cocommutativity/coassociativity of Delta,
    and exactness of the divided-difference division."""
    rng = random.Random(seed)
    for d in range(cap + 1):
        for w in elements_by_length(n, cap)[d]:
            words = _random_reduced_words(w, rng)
            if any(from_word(n, word) != w for word in words):
                return CheckResult(
                    "well_defined", False, {"n": n, "w": w.text(), "failed": "words"}
                )
            base = coproduct(NilHeckeElement.basis_element(w))
            for word in words:
                t = TensorElement.one(n)
                from .nilhecke import _act_generator

                for i in reversed(word):
                    t = _act_generator(n, i, t)
                if t != base:
                    return CheckResult(
                        "well_defined",
                        False,
                        {"n": n, "w": w.text(), "failed": "coproduct_word"},
                    )
            flipped = TensorElement(
                n, {(v, u): c for (u, v), c in base.terms.items()}
            )
            if flipped != base:
                return CheckResult(
                    "well_defined",
                    False,
                    {"n": n, "w": w.text(), "failed": "cocommutativity"},
                )
            if not _coassociative(n, w, base):
                return CheckResult(
                    "well_defined",
                    False,
                    {"n": n, "w": w.text(), "failed": "coassociativity"},
                )
    for _ in range(divisions):
        i = rng.randrange(n)
        s = random_poly(rng, n - 1, max_degree=4)
        try:
            divided_difference(i, s)
        except ArithmeticError:
            return CheckResult(
                "well_defined", False, {"n": n, "failed": "division", "s": s.text()}
            )
    return CheckResult("well_defined", True)


def _coassociative(n: int, w, delta: TensorElement) -> bool:
    """(Delta (x) 1) Delta(A_w) = (1 (x) Delta) Delta(A_w)."""
    left: dict = {}
    right: dict = {}
    for (u, v), c in delta.terms.items():
        for (a, b), cc in coproduct(NilHeckeElement.basis_element(u)).terms.items():
            key = (a, b, v)
            prod = c * cc
            left[key] = left[key] + prod if key in left else prod
        for (a, b), cc in coproduct(NilHeckeElement.basis_element(v)).terms.items():
            key = (u, a, b)
            prod = c * cc
            right[key] = right[key] + prod if key in right else prod
    left = {k: c for k, c in left.items() if not c.is_zero()}
    right = {k: c for k, c in right.items() if not c.is_zero()}
    return left == right


def check_symmetry(n: int, cap: int) -> CheckResult:
    """Composition coefficients of affine Stanley functions only depend on
    the sorted partition."""
    from itertools import permutations

    env = _env(n, max_degree=max(cap, 8))
    from .symfunc import partitions

    for d in range(1, cap + 1):
        lams = partitions(d, n - 1)
        for w in elements_by_length(n, cap)[d]:
            f = env.affine_stanley(w)
            for lam in lams:
                want = f.terms.get(lam, 0)
                for comp in set(permutations(lam)):
                    if env.composition_coefficient(w, comp) != want:
                        return CheckResult(
                            "symmetry",
                            False,
                            {"n": n, "w": w.text(), "comp": list(comp)},
                        )
    return CheckResult("symmetry", True)


def check_grassmannian_leading(n: int, cap: int) -> CheckResult:
    """Every nonzero combination of dual-basis elements keeps a
    Grassmannian term (the elements have distinct leading terms A_w)."""
    env = _env(n, max_degree=max(cap, 8))
    rng = random.Random(7)
    for d in range(1, cap + 1):
        basis = [env.noncommutative_kschur(w) for w in grassmannians_by_length(n, cap)[d]]
        grass = set(grassmannians_by_length(n, cap)[d])
        for b, w in zip(basis, grassmannians_by_length(n, cap)[d]):
            if {v for v in b.terms if v in grass} != {w}:
                return CheckResult(
                    "grassmannian_leading", False, {"n": n, "w": w.text()}
                )
        for _ in range(10):
            combo = NilCoxeterElement(n)
            for b in basis:
                combo = combo + b.scale(rng.randrange(-3, 4))
            if combo.is_zero():
                continue
            if not any(v in grass for v in combo.terms):
                return CheckResult(
                    "grassmannian_leading", False, {"n": n, "d": d, "failed": "combo"}
                )
    return CheckResult("grassmannian_leading", True)


# -- suites ------------------------------------------------------------------


def run_suite(
    suite: str, n: int, max_length: int, seed: int
) -> list[CheckResult]:
    rng = random.Random(seed)
    cap = max_length
    table = {
        "example61": lambda: [check_example_expansions()],
        "annihilate": lambda: [check_annihilation(n, rng)],
        "commutativity": lambda: [check_commutativity(n)],
        "coproduct": lambda: [
            check_coproduct_h(n),
            check_coproduct_multiplicative(n, min(cap, 6)),
        ],
        "duality": lambda: [check_duality(n, min(cap, 6))],
        "bb": lambda: [check_dual_routes(n, min(cap, 5))],
        "positivity": lambda: [check_positivity(n, min(cap, 6))],
        "factorization": lambda: [check_factorization(n)],
        "center": lambda: [check_center(n)],
        "welldefined": lambda: [check_well_defined(n, min(cap, 5), seed)],
        "symmetry": lambda: [check_symmetry(n, min(cap, 5))],
        "grassmannian": lambda: [check_grassmannian_leading(n, min(cap, 5))],
    }
    if suite == "all":
        out = []
        for name in table:
            out.extend(table[name]())
        return out
    if suite not in table:
        raise KeyError(suite)
    return table[suite]()


SUITES = (
    "example61",
    "annihilate",
    "commutativity",
    "coproduct",
    "duality",
    "bb",
    "positivity",
    "factorization",
    "center",
    "welldefined",
    "symmetry",
    "grassmannian",
    "all",
)
