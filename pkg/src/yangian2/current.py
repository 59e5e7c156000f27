"""The classical oracle: gl_{m+n}[t]/(t^T) as a Lie superalgebra over GF(2).

Basis symbols E[i,j]t^r (0 <= r < T) are packed like RTT generators,
(i << 16) | (j << 8) | r, with the t-exponent zero-based, so that int
order is the (i, j, r) lexicographic normal-form order.  The bracket is

    [E[i,j]t^r, E[k,l]t^s] = delta_{k,j} E[i,l]t^(r+s) + delta_{l,i} E[k,j]t^(r+s)

truncated to zero once r + s reaches T.  The superstructure in
characteristic 2 is the quadratic map Q = matrix squaring restricted to
the odd part, and the enveloping algebra used throughout is the super
one: odd basis squares rewrite to Q(basis) = 0.

The truncation is a genuine quotient Lie superalgebra (the ideal t^T g is
stable under both the bracket and the squaring map), so every identity
checked here is exact, not approximate.
"""

from __future__ import annotations

from .linalg import BitEchelon
from .report import Report


def cpack(i: int, j: int, r: int) -> int:
    return (i << 16) | (j << 8) | r


def cunpack(g: int) -> tuple[int, int, int]:
    return (g >> 16, (g >> 8) & 0xFF, g & 0xFF)


def render_cword(word) -> str:
    if not word:
        return "1"
    return "*".join(f"E[{g >> 16},{(g >> 8) & 0xFF}]t^{g & 0xFF}" for g in word)


class ClassicalElement:
    """Normal-form element of the super enveloping algebra of the truncation."""

    __slots__ = ("alg", "words")

    def __init__(self, alg: "CurrentAlgebra", words: frozenset):
        self.alg = alg
        self.words = words

    def __bool__(self) -> bool:
        return bool(self.words)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassicalElement)
                and self.alg.key == other.alg.key
                and self.words == other.words)

    def __hash__(self) -> int:
        return hash((self.alg.key, self.words))

    def __add__(self, other: "ClassicalElement") -> "ClassicalElement":
        if self.alg.key != other.alg.key:
            raise ValueError("elements live over different truncations")
        return ClassicalElement(self.alg, self.words ^ other.words)

    def __mul__(self, other: "ClassicalElement") -> "ClassicalElement":
        return self.alg.multiply(self, other)

    def is_lie(self) -> bool:
        return all(len(w) == 1 for w in self.words)

    def parity(self):
        seen = {self.alg.word_parity(w) for w in self.words}
        if not seen:
            return 0
        return seen.pop() if len(seen) == 1 else None

    def canonical(self) -> str:
        if not self.words:
            return "0"
        return " + ".join(render_cword(w) for w in sorted(self.words))

    def __repr__(self) -> str:
        return self.canonical()


class CurrentAlgebra:
    def __init__(self, m: int, n: int, trunc: int):
        if m < 1 or n < 1 or trunc < 1:
            raise ValueError("need m, n >= 1 and truncation >= 1")
        self.m = m
        self.n = n
        self.trunc = trunc
        self.key = (m, n, trunc)
        self._nf_cache: dict = {}

    @property
    def size(self) -> int:
        return self.m + self.n

    def block(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError(f"index {i} out of range 1..{self.size}")
        return 0 if i <= self.m else 1

    def parity(self, i: int, j: int) -> int:
        return (self.block(i) + self.block(j)) % 2

    def gen_parity(self, g: int) -> int:
        return self.parity(g >> 16, (g >> 8) & 0xFF)

    def word_parity(self, word) -> int:
        return sum(self.gen_parity(g) for g in word) % 2

    def generators(self) -> list[int]:
        return [cpack(i, j, r)
                for i in range(1, self.size + 1)
                for j in range(1, self.size + 1)
                for r in range(self.trunc)]

    # -- constructors --------------------------------------------------------

    def zero(self) -> ClassicalElement:
        return ClassicalElement(self, frozenset())

    def one(self) -> ClassicalElement:
        return ClassicalElement(self, frozenset({()}))

    def gen(self, i: int, j: int, r: int) -> ClassicalElement:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise ValueError(f"index ({i},{j}) out of range 1..{self.size}")
        if not 0 <= r < self.trunc:
            raise ValueError(f"t-exponent {r} out of range 0..{self.trunc - 1}")
        return ClassicalElement(self, frozenset({(cpack(i, j, r),)}))

    # -- Lie structure ---------------------------------------------------------

    def _bracket_gens(self, a: int, b: int) -> frozenset:
        i, j, r = cunpack(a)
        k, l, s = cunpack(b)
        if r + s >= self.trunc:
            return frozenset()
        out: set = set()
        if k == j:
            out ^= {(cpack(i, l, r + s),)}
        if l == i:
            out ^= {(cpack(k, j, r + s),)}
        return frozenset(out)

    def bracket(self, x: ClassicalElement, y: ClassicalElement) -> ClassicalElement:
        """Lie bracket, bilinear over degree-1 elements."""
        if not (x.is_lie() and y.is_lie()):
            raise ValueError("bracket is defined on Lie elements")
        acc: set = set()
        for (a,) in x.words:
            for (b,) in y.words:
                acc ^= self._bracket_gens(a, b)
        return ClassicalElement(self, frozenset(acc))

    def p_map(self, x: ClassicalElement) -> ClassicalElement:
        """Matrix square of a Lie element, re-expanded in the basis.

        On basis symbols this is E[i,j]t^r -> delta_{i,j} E[i,j]t^(2r),
        with t-overflow truncating to zero.
        """
        if not x.is_lie():
            raise ValueError("p_map is defined on Lie elements")
        acc: set = set()
        for (a,) in x.words:
            i, j, r = cunpack(a)
            for (b,) in x.words:
                k, l, s = cunpack(b)
                if j == k and r + s < self.trunc:
                    acc ^= {(cpack(i, l, r + s),)}
        return ClassicalElement(self, frozenset(acc))

    def quadratic_q(self, y: ClassicalElement) -> ClassicalElement:
        """The quadratic map of the superstructure: squaring on the odd part."""
        if not y.is_lie():
            raise ValueError("quadratic_q is defined on Lie elements")
        if any(self.gen_parity(w[0]) == 0 for w in y.words):
            raise ValueError("quadratic_q needs a purely odd element")
        return self.p_map(y)

    # -- super enveloping algebra ----------------------------------------------

    def _nf_word(self, word: tuple) -> frozenset:
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        idx = -1
        kill = False
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a > b:
                idx = p
                break
            if a == b and self.gen_parity(a):
                # odd basis square rewrites to Q(basis) = 0
                idx = p
                kill = True
                break
        if idx < 0:
            result = frozenset({word})
        elif kill:
            result = frozenset()
        else:
            a, b = word[idx], word[idx + 1]
            pre, post = word[:idx], word[idx + 2:]
            acc = set(self._nf_word(pre + (b, a) + post))
            for mid in self._bracket_gens(a, b):
                acc ^= self._nf_word(pre + mid + post)
            result = frozenset(acc)
        cache[word] = result
        return result

    def normal_form(self, words) -> ClassicalElement:
        acc: set = set()
        for w in words:
            packed = tuple(g if isinstance(g, int) else cpack(*g) for g in w)
            acc ^= self._nf_word(packed)
        return ClassicalElement(self, frozenset(acc))

    def multiply(self, x: ClassicalElement, y: ClassicalElement) -> ClassicalElement:
        acc: set = set()
        for wa in x.words:
            for wb in y.words:
                acc ^= self._nf_word(wa + wb)
        return ClassicalElement(self, frozenset(acc))

    def commutator(self, x, y) -> ClassicalElement:
        return self.multiply(x, y) + self.multiply(y, x)

    # -- distinguished central elements -----------------------------------------

    def z_element(self, r: int) -> ClassicalElement:
        """Sum of all diagonal symbols at one t-exponent."""
        if not 0 <= r < self.trunc:
            raise ValueError(f"t-exponent {r} out of range 0..{self.trunc - 1}")
        words = frozenset({(cpack(i, i, r),) for i in range(1, self.size + 1)})
        return ClassicalElement(self, words)

    def xi(self, i: int, j: int, r: int) -> ClassicalElement:
        """x^2 + x^[2] for the basis symbol E[i,j]t^r, inside the truncation."""
        g = self.gen(i, j, r)
        square = self.multiply(g, g)
        correction = self.zero()
        if i == j and 2 * r < self.trunc:
            correction = self.gen(i, i, 2 * r)
        return square + correction

    def classical_p_center(self) -> list[tuple[dict, ClassicalElement]]:
        """Even-parity p-center generators with 2r inside the truncation."""
        out = []
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                if self.parity(i, j):
                    continue
                for r in range(self.trunc):
                    if 2 * r >= self.trunc:
                        continue
                    out.append(({"i": i, "j": j, "r": r}, self.xi(i, j, r)))
        return out

    def supermonomials(self, max_len: int) -> list[tuple]:
        """Ordered supermonomials of polynomial degree <= max_len."""
        gens = self.generators()
        out: list[tuple] = []

        def rec(k: int, remaining: int, word: tuple) -> None:
            if k == len(gens):
                out.append(word)
                return
            g = gens[k]
            top = remaining if not self.gen_parity(g) else min(remaining, 1)
            for mult in range(top + 1):
                rec(k + 1, remaining - mult, word + (g,) * mult)

        rec(0, max_len, ())
        out.sort(key=lambda w: (len(w), w))
        return out


# -- symmetric-superalgebra layer (for the invariants report) -------------------


def s_multiply_words(alg: CurrentAlgebra, w1: tuple, w2: tuple):
    """Product in S(g_0) tensor Lambda(g_1): sorted merge, odd squares vanish."""
    merged = tuple(sorted(w1 + w2))
    for p in range(len(merged) - 1):
        if merged[p] == merged[p + 1] and alg.gen_parity(merged[p]):
            return None
    return merged


def s_adjoint(alg: CurrentAlgebra, g: int, word: tuple) -> frozenset:
    """Adjoint action of a generator on an S-supermonomial, as a derivation."""
    acc: set = set()
    for pos in range(len(word)):
        rest = word[:pos] + word[pos + 1:]
        for (h,) in alg._bracket_gens(g, word[pos]):
            prod = s_multiply_words(alg, rest, (h,))
            if prod is not None:
                acc ^= {prod}
    return frozenset(acc)


def s_supermonomials_of_degree(alg: CurrentAlgebra, degree: int) -> list[tuple]:
    gens = alg.generators()
    out: list[tuple] = []

    def rec(k: int, remaining: int, word: tuple) -> None:
        if remaining == 0:
            out.append(word)
            return
        if k == len(gens):
            return
        g = gens[k]
        top = remaining if not alg.gen_parity(g) else min(remaining, 1)
        for mult in range(top, -1, -1):
            rec(k + 1, remaining - mult, word + (g,) * mult)

    rec(0, degree, ())
    return sorted(out)


def random_lie_element(alg: CurrentAlgebra, rng, odd_only: bool = False) -> ClassicalElement:
    pool = [g for g in alg.generators() if not odd_only or alg.gen_parity(g)]
    words = {(g,) for g in pool if rng.random() < 0.4}
    return ClassicalElement(alg, frozenset(words))


def classical_suite(alg: CurrentAlgebra, seed: int, samples: int,
                    pbw_degree: int, invariants_degree: int) -> Report:
    """Verification suite for the classical oracle.

    Covers the bracket axioms, centrality of the diagonal sums z_r and of
    the even p-center generators in the super enveloping algebra, the two
    quadratic-map identities on random inputs, restricted-structure
    semilinearity via centrality of x^2 + x^[2] for random even x, the
    PBW count at small degree, and the invariants comparison.
    """
    import random as _random

    rng = _random.Random(seed)
    report = Report("classical",
                    config={"m": alg.m, "n": alg.n, "trunc": alg.trunc,
                            "seed": seed, "samples": samples,
                            "pbw_degree": pbw_degree,
                            "invariants_degree": invariants_degree})
    gens = alg.generators()
    gen_elems = [ClassicalElement(alg, frozenset({(g,)})) for g in gens]

    # skew-symmetry and Jacobi on basis triples (sampled when large)
    for g in gens:
        x = ClassicalElement(alg, frozenset({(g,)}))
        report.add("bracket-self", {"g": render_cword((g,))},
                   not alg.bracket(x, x))
    triples = [(a, b, c) for a in gen_elems for b in gen_elems for c in gen_elems]
    if len(triples) > 4000:
        triples = rng.sample(triples, 4000)
    jac_fail = 0
    for a, b, c in triples:
        lhs = (alg.bracket(alg.bracket(a, b), c)
               + alg.bracket(alg.bracket(b, c), a)
               + alg.bracket(alg.bracket(c, a), b))
        if lhs:
            jac_fail += 1
    report.add("jacobi", {"triples": len(triples)}, jac_fail == 0,
               witness=None if jac_fail == 0 else f"{jac_fail} failing triples")

    # centrality of z_r and of the even p-center inside the truncation
    for r in range(alg.trunc):
        z = alg.z_element(r)
        bad = next((g for g in gen_elems if alg.commutator(z, g)), None)
        report.add("central-z", {"r": r}, bad is None,
                   witness=None if bad is None else alg.commutator(z, bad).canonical())
    for params, xi in alg.classical_p_center():
        bad = next((g for g in gen_elems if alg.commutator(xi, g)), None)
        report.add("central-xi", params, bad is None,
                   witness=None if bad is None else alg.commutator(xi, bad).canonical())

    # quadratic map identities on random inputs
    for k in range(samples):
        y1 = random_lie_element(alg, rng, odd_only=True)
        y2 = random_lie_element(alg, rng, odd_only=True)
        lhs = alg.quadratic_q(y1 + y2) + alg.quadratic_q(y1) + alg.quadratic_q(y2)
        ok = lhs == alg.bracket(y1, y2)
        report.add("q-polarisation", {"sample": k}, ok,
                   witness=None if ok else lhs.canonical())
        y = random_lie_element(alg, rng, odd_only=True)
        x = random_lie_element(alg, rng)
        lhs2 = alg.bracket(alg.quadratic_q(y), x)
        rhs2 = alg.bracket(y, alg.bracket(y, x))
        ok2 = lhs2 == rhs2
        report.add("q-adjoint", {"sample": k}, ok2,
                   witness=None if ok2 else (lhs2 + rhs2).canonical())

    # semilinearity shadow: x^2 + x^[2] central for random even x
    for k in range(samples):
        x = random_lie_element(alg, rng)
        even = ClassicalElement(alg, frozenset(
            w for w in x.words if alg.gen_parity(w[0]) == 0))
        xi = alg.multiply(even, even) + alg.p_map(even)
        bad = next((g for g in gen_elems if alg.commutator(xi, g)), None)
        report.add("central-xi-random", {"sample": k}, bad is None,
                   witness=None if bad is None else even.canonical())

    # PBW count at small degree: rank of all words equals supermonomial count
    if pbw_degree >= 0:
        supers = alg.supermonomials(pbw_degree)
        index = {w: k for k, w in enumerate(supers)}
        ech = BitEchelon()
        total_words = 0

        def words_of_len(length):
            if length == 0:
                yield ()
                return
            for w in words_of_len(length - 1):
                for g in gens:
                    yield w + (g,)

        for length in range(pbw_degree + 1):
            for w in words_of_len(length):
                total_words += 1
                vec = 0
                for nf_w in alg._nf_word(w):
                    vec |= 1 << index[nf_w]
                ech.add(vec)
        report.add("pbw-count",
                   {"degree": pbw_degree, "words": total_words,
                    "supermonomials": len(supers), "rank": ech.rank},
                   ech.rank == len(supers))

    for d in range(invariants_degree + 1):
        report.extend(invariants_dimension(alg, d))
    return report


def invariants_dimension(alg: CurrentAlgebra, degree: int) -> Report:
    """Compare g-invariants of the degree-d piece of S_super with the span
    generated by the diagonal sums z_r and the even squares (excluding the
    (1,1) position).

    Truncation can only enlarge the invariant side (brackets that would
    leave the truncation act as zero), so the report asserts containment
    of the generated span and records both dimensions; equality is data.
    """
    basis = s_supermonomials_of_degree(alg, degree)
    index = {w: k for k, w in enumerate(basis)}
    gens = alg.generators()

    # kernel of the stacked adjoint action
    columns = []
    for w in basis:
        col = 0
        for gi, g in enumerate(gens):
            for out_word in s_adjoint(alg, g, w):
                col |= 1 << (gi * len(basis) + index[out_word])
        columns.append(col)
    # kernel dimension via rank of the action matrix
    from .linalg import rank_of

    action_rank = rank_of(columns)
    invariant_dim = len(basis) - action_rank

    # generated side: products of z_r (degree 1) and even squares (degree 2)
    z_list = [frozenset({(cpack(i, i, r),) for i in range(1, alg.size + 1)})
              for r in range(alg.trunc)]
    squares = []
    for i in range(1, alg.size + 1):
        for j in range(1, alg.size + 1):
            if alg.parity(i, j) or (i, j) == (1, 1):
                continue
            for r in range(alg.trunc):
                g = cpack(i, j, r)
                squares.append(frozenset({(g, g)}))

    products: list[frozenset] = []

    def expand_product(words_a: frozenset, words_b: frozenset) -> frozenset:
        acc: set = set()
        for wa in words_a:
            for wb in words_b:
                prod = s_multiply_words(alg, wa, wb)
                if prod is not None:
                    acc ^= {prod}
        return frozenset(acc)

    factors = [(1, z) for z in z_list] + [(2, sq) for sq in squares]

    def rec(k: int, remaining: int, acc: frozenset) -> None:
        if remaining == 0:
            products.append(acc)
            return
        if k == len(factors):
            return
        deg, words = factors[k]
        top = remaining // deg
        for mult in range(top, -1, -1):
            cur = acc
            usable = True
            for _ in range(mult):
                cur = expand_product(cur, words)
                if not cur:
                    usable = False
                    break
            if usable or mult == 0:
                rec(k + 1, remaining - mult * deg, cur)

    rec(0, degree, frozenset({()}))

    ech = BitEchelon()
    contained = True
    for prod_words in products:
        vec = 0
        for w in prod_words:
            vec |= 1 << index[w]
        ech.add(vec)
    generated_dim = ech.rank

    # containment: every generated product must be killed by every generator
    for prod_words in products:
        for g in gens:
            acc: set = set()
            for w in prod_words:
                acc ^= s_adjoint(alg, g, w)
            if acc:
                contained = False
                break
        if not contained:
            break

    report = Report("classical-invariants",
                    config={"m": alg.m, "n": alg.n, "trunc": alg.trunc,
                            "degree": degree})
    report.add("generated-inside-invariants", {"degree": degree}, contained)
    report.add("dimensions",
               {"invariant_dim": invariant_dim, "generated_dim": generated_dim,
                "equal": generated_dim == invariant_dim},
               generated_dim <= invariant_dim)
    return report
