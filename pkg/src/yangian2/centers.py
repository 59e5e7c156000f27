"""Center generators, the odd-square quotient, and the classical bridge.

c(u) is the product of the diagonal Gauss series with successive shifts
u, u-1, u-2, ... (only the shift parity survives mod 2); b_i(u) is
d_i(u) d_i(u-1).  Root-element squares are tagged by parity: the odd ones
generate the ideal that defines the super Yangian quotient, the even ones
belong to the p-center of the quotient.

The quotient is handled as bounded-degree linear algebra: J_bound is the
span of a * z * b over PBW monomials a, b and odd squares z, row-reduced
with columns ordered so that non-supermonomials are preferred pivots.
When the resulting rank equals dim F_bound minus the supermonomial count,
the reduction map computes canonical representatives supported on
super-ordered monomials; that dimension certificate is exactly the
bounded-degree shadow of the freeness of the parent algebra over the odd
p-center.

gr_leading_term realises the associated-graded bridge: the loop-degree-d
part of an element maps to the classical oracle by sending each factor
t[i,j,r] of a top monomial to E[i,j]t^(r-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .current import ClassicalElement, CurrentAlgebra, cpack
from .drinfeld import DrinfeldTable
from .errors import DegreeCapError
from .linalg import BitEchelon
from .report import Report
from .rtt import Element, RTTAlgebra, word_degree, word_loop_degree
from .series import YSeries, series_mul, series_shift


def c_series(tab: DrinfeldTable) -> YSeries:
    """Shifted product of all diagonal series; coefficients are central."""
    alg = tab.alg
    out = tab.d_series(1)
    for j in range(2, alg.shape.size + 1):
        out = series_mul(out, series_shift(tab.d_series(j), j - 1))
    return out


def b_series(tab: DrinfeldTable, i: int) -> YSeries:
    """d_i(u) d_i(u-1); even coefficients generate the diagonal p-center."""
    d = tab.d_series(i)
    return series_mul(d, series_shift(d, 1))


@dataclass
class PSquare:
    kind: str      # "e" or "f"
    i: int
    j: int
    r: int
    parity: int
    element: Element

    @property
    def label(self) -> str:
        return f"({self.kind}[{self.i},{self.j}]^({self.r}))^2"


def p_center_squares(tab: DrinfeldTable, bound: int) -> list[PSquare]:
    """Squares of all root elements with 2r <= bound, tagged by parity."""
    alg = tab.alg
    out: list[PSquare] = []
    for (i, j), by_r in sorted(tab.e.items()):
        for r in sorted(by_r):
            if 2 * r <= bound:
                sq = alg.multiply(by_r[r], by_r[r])
                out.append(PSquare("e", i, j, r, alg.shape.parity(i, j), sq))
    for (j, i), by_r in sorted(tab.f.items()):
        for r in sorted(by_r):
            if 2 * r <= bound:
                sq = alg.multiply(by_r[r], by_r[r])
                out.append(PSquare("f", j, i, r, alg.shape.parity(i, j), sq))
    return out


@dataclass
class CenterTable:
    tab: DrinfeldTable
    c: list[Element]
    b: dict[int, list[Element]]
    squares: list[PSquare]


def build_center_table(tab: DrinfeldTable, square_bound: int | None = None) -> CenterTable:
    alg = tab.alg
    bound = alg.shape.cap if square_bound is None else square_bound
    c = list(c_series(tab).coeffs)
    b = {i: list(b_series(tab, i).coeffs) for i in range(1, alg.shape.size + 1)}
    return CenterTable(tab, c, b, p_center_squares(tab, bound))


def is_central(x: Element, budget: int) -> Report:
    """Commutators of x against every generator with superscript <= budget."""
    alg = x.alg
    if x.degree() + budget > alg.shape.cap:
        raise DegreeCapError(
            f"centrality budget {budget} plus degree {x.degree()} "
            f"exceeds cap {alg.shape.cap}")
    report = Report("centrality", config={"budget": budget})
    size = alg.shape.size
    for s in range(1, budget + 1):
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                c = alg.commutator(x, alg.gen(i, j, s))
                ok = not c
                report.add("commutes", {"i": i, "j": j, "s": s}, ok,
                           witness=None if ok else c.canonical())
    return report


# -- the super quotient -------------------------------------------------------


@dataclass
class QuotientModel:
    alg: RTTAlgebra
    bound: int
    basis: tuple            # all PBW monomials <= bound, non-super block first
    index: dict
    echelon: BitEchelon
    n_nonsuper: int
    dim_full: int
    ideal_rank: int
    dim_super: int
    expected_super: int
    certificate_ok: bool

    def to_vector(self, x: Element) -> int:
        vec = 0
        for w in x.words:
            pos = self.index.get(w)
            if pos is None:
                raise DegreeCapError(
                    f"element degree exceeds quotient bound {self.bound}")
            vec |= 1 << pos
        return vec

    def reduce(self, x: Element) -> Element:
        """Canonical representative of x modulo the odd-square ideal."""
        residue = self.echelon.reduce(self.to_vector(x))
        words = set()
        while residue:
            low = residue & -residue
            words.add(self.basis[low.bit_length() - 1])
            residue ^= low
        return Element(self.alg, frozenset(words))


def build_quotient(alg: RTTAlgebra, bound: int, tab: DrinfeldTable) -> QuotientModel:
    """Row-reduce the bounded odd-square ideal and certify the dimension count."""
    supers = set(alg.pbw_monomials(bound, super_only=True))
    all_monos = alg.pbw_monomials(bound)
    non_super = [w for w in all_monos if w not in supers]
    super_list = [w for w in all_monos if w in supers]
    basis = tuple(non_super + super_list)
    index = {w: k for k, w in enumerate(basis)}

    odd_squares = [sq for sq in p_center_squares(tab, bound) if sq.parity == 1]
    ech = BitEchelon()
    monos_by_degree: dict[int, list] = {}
    for w in all_monos:
        monos_by_degree.setdefault(word_degree(w), []).append(w)

    for sq in odd_squares:
        dz = sq.element.degree()
        room = bound - dz
        for da in range(room + 1):
            for wa in monos_by_degree.get(da, []):
                left = alg.multiply(Element(alg, frozenset({wa})), sq.element)
                for db in range(room - da + 1):
                    for wb in monos_by_degree.get(db, []):
                        row_el = alg.multiply(left, Element(alg, frozenset({wb})))
                        vec = 0
                        for w in row_el.words:
                            vec |= 1 << index[w]
                        ech.add(vec)

    dim_full = len(basis)
    ideal_rank = ech.rank
    dim_super = dim_full - ideal_rank
    expected = len(super_list)
    pivots_in_nonsuper = all(c < len(non_super) for c in ech.pivots)
    return QuotientModel(alg, bound, basis, index, ech, len(non_super),
                         dim_full, ideal_rank, dim_super, expected,
                         dim_super == expected and pivots_in_nonsuper)


def super_normal_form(x: Element, quotient: QuotientModel) -> Element:
    return quotient.reduce(x)


def quotient_report(quotient: QuotientModel) -> Report:
    report = Report("super-quotient",
                    config={"m": quotient.alg.shape.m,
                            "n": quotient.alg.shape.n,
                            "bound": quotient.bound})
    report.add("dimension",
               {"dim_full": quotient.dim_full,
                "ideal_rank": quotient.ideal_rank,
                "dim_super": quotient.dim_super,
                "expected": quotient.expected_super},
               quotient.certificate_ok)
    return report


# -- the classical bridge -----------------------------------------------------


def gr_leading_term(x: Element, d: int, classical: CurrentAlgebra) -> ClassicalElement:
    """Image of the loop-degree-d graded piece of x in the classical oracle."""
    top_words = []
    for w in x.words:
        ld = word_loop_degree(w)
        if ld > d:
            raise ValueError(f"element has loop degree {ld} > {d}")
        if ld == d:
            top_words.append(tuple(
                cpack(g >> 16, (g >> 8) & 0xFF, (g & 0xFF) - 1) for g in w))
    return classical.normal_form(top_words)


def gr_bridge_report(tab: DrinfeldTable, centers: CenterTable,
                     classical: CurrentAlgebra, max_r: int) -> Report:
    """Leading terms of d/e/f, c and b against their classical counterparts."""
    alg = tab.alg
    report = Report("gr-bridge",
                    config={"m": alg.shape.m, "n": alg.shape.n, "max_r": max_r})

    def expect_gen(i, j, r):
        return classical.gen(i, j, r - 1)

    for i in sorted(tab.d):
        for r in range(1, min(max_r, tab.order) + 1):
            got = gr_leading_term(tab.d[i][r], r - 1, classical)
            want = expect_gen(i, i, r)
            report.add("gr-d", {"i": i, "r": r}, got == want,
                       witness=None if got == want else got.canonical())
    for (i, j), by_r in sorted(tab.e.items()):
        for r in sorted(by_r):
            if r > max_r:
                continue
            got = gr_leading_term(by_r[r], r - 1, classical)
            want = expect_gen(i, j, r)
            report.add("gr-e", {"i": i, "j": j, "r": r}, got == want,
                       witness=None if got == want else got.canonical())
    for (j, i), by_r in sorted(tab.f.items()):
        for r in sorted(by_r):
            if r > max_r:
                continue
            got = gr_leading_term(by_r[r], r - 1, classical)
            want = expect_gen(j, i, r)
            report.add("gr-f", {"j": j, "i": i, "r": r}, got == want,
                       witness=None if got == want else got.canonical())

    for r in range(1, min(max_r, len(centers.c) - 1) + 1):
        got = gr_leading_term(centers.c[r], r - 1, classical)
        want = classical.z_element(r - 1)
        report.add("gr-c", {"r": r}, got == want,
                   witness=None if got == want else got.canonical())

    for i, coeffs in sorted(centers.b.items()):
        for two_r in range(2, len(coeffs)):
            if two_r % 2 or two_r > 2 * max_r:
                continue
            r = two_r // 2
            got = gr_leading_term(coeffs[two_r], two_r - 2, classical)
            g = classical.gen(i, i, r - 1)
            want = classical.multiply(g, g) + classical.gen(i, i, 2 * r - 2)
            report.add("gr-b", {"i": i, "2r": two_r}, got == want,
                       witness=None if got == want else got.canonical())
    return report


# -- bounded freeness shadow ----------------------------------------------------


def independence_check(gens: list[tuple[str, Element]], bound: int,
                       quotient: QuotientModel | None = None) -> Report:
    """Linear independence of all products of the given elements up to bound.

    Products are formed in the listed order with multiplicities; when a
    quotient model is supplied the products are reduced first, realising
    the freeness statement inside the quotient.
    """
    if not gens:
        raise ValueError("need at least one generator")
    alg = gens[0][1].alg
    report = Report("independence", config={"bound": bound,
                                            "generators": [g[0] for g in gens],
                                            "quotient": quotient is not None})
    zeros = [label for label, el in gens if not el]
    if zeros:
        report.add("rank", {"products": 0, "rank": 0}, False,
                   witness=f"zero generators: {zeros}")
        return report
    degrees = [el.degree() for _, el in gens]
    if any(d == 0 for d in degrees):
        raise ValueError("independence generators must have positive degree")
    if any(d > bound for d in degrees):
        raise DegreeCapError("generator degree exceeds the requested bound")

    exponents: list[tuple[int, ...]] = []

    def rec(k: int, remaining: int, vec: tuple) -> None:
        if k == len(gens):
            exponents.append(vec)
            return
        top = remaining // degrees[k]
        for mult in range(top + 1):
            rec(k + 1, remaining - mult * degrees[k], vec + (mult,))

    rec(0, bound, ())

    if quotient is None:
        basis = alg.pbw_monomials(bound)
        index = {w: k for k, w in enumerate(basis)}
    else:
        index = quotient.index

    ech = BitEchelon()
    dependents = []
    for vec in exponents:
        element = alg.one()
        for (label, el), mult in zip(gens, vec):
            for _ in range(mult):
                element = alg.multiply(element, el)
        if quotient is not None:
            element = quotient.reduce(element)
        row = 0
        for w in element.words:
            row |= 1 << index[w]
        if ech.add(row) == 0:
            dependents.append(vec)
    ok = not dependents
    report.add("rank", {"products": len(exponents), "rank": ech.rank}, ok,
               witness=None if ok else f"dependent exponents: {dependents[:5]}")
    return report


def freeness_shadow_report(centers: CenterTable, quotient: QuotientModel,
                           flavour: str = "p-center") -> Report:
    """Bounded shadow of the two freeness corollaries for the quotient.

    Products {center monomial} x {square-free generator monomial} of total
    degree <= the quotient bound must be linearly independent and exactly
    fill the quotient: their count and their rank both equal dim_super.
    The "p-center" flavour takes all b_i^(2r) plus even squares against
    square-free monomials in every d/e/f generator; the "full-center"
    flavour takes c^(r), b_i^(2r) for i >= 2 plus even squares against
    square-free monomials that omit the first diagonal family.
    """
    tab = centers.tab
    alg = tab.alg
    bound = quotient.bound
    if tab.order < bound:
        raise DegreeCapError(
            f"freeness shadow at bound {bound} needs table order >= {bound}")
    size = alg.shape.size

    center_gens: list[tuple[str, Element]] = []
    if flavour == "full-center":
        center_gens += [(f"c^({r})", centers.c[r]) for r in range(1, bound + 1)]
        b_lo, d_lo = 2, 2
    elif flavour == "p-center":
        b_lo, d_lo = 1, 1
    else:
        raise ValueError(f"unknown flavour {flavour!r}")
    for i in range(b_lo, size + 1):
        for two_r in range(2, bound + 1, 2):
            center_gens.append((f"b_{i}^({two_r})", centers.b[i][two_r]))
    center_gens += [(sq.label, sq.element) for sq in centers.squares
                    if sq.parity == 0 and 2 * sq.r <= bound]

    symbols: list[tuple[Element, int]] = []
    for i in range(d_lo, size + 1):
        for r in range(1, bound + 1):
            symbols.append((tab.d[i][r], r))
    for (_, _), by_r in sorted(tab.e.items()):
        for r in sorted(by_r):
            if r <= bound:
                symbols.append((by_r[r], r))
    for (_, _), by_r in sorted(tab.f.items()):
        for r in sorted(by_r):
            if r <= bound:
                symbols.append((by_r[r], r))

    ech = BitEchelon()
    state = {"count": 0, "dependent": 0}

    def emit(prod: Element) -> None:
        state["count"] += 1
        reduced = quotient.reduce(prod)
        vec = 0
        for w in reduced.words:
            vec |= 1 << quotient.index[w]
        if ech.add(vec) == 0:
            state["dependent"] += 1

    def rec_symbols(k: int, remaining: int, prod: Element) -> None:
        if k == len(symbols):
            emit(prod)
            return
        el, deg = symbols[k]
        rec_symbols(k + 1, remaining, prod)
        if deg <= remaining:
            rec_symbols(k + 1, remaining - deg, alg.multiply(prod, el))

    def rec_center(k: int, remaining: int, prod: Element) -> None:
        if k == len(center_gens):
            rec_symbols(0, remaining, prod)
            return
        _, el = center_gens[k]
        deg = el.degree()
        mult = 0
        cur = prod
        while True:
            rec_center(k + 1, remaining - mult * deg, cur)
            mult += 1
            if mult * deg > remaining:
                break
            cur = alg.multiply(cur, el)

    rec_center(0, bound, alg.one())

    report = Report("freeness-shadow",
                    config={"m": alg.shape.m, "n": alg.shape.n,
                            "bound": bound, "flavour": flavour})
    ok = (state["dependent"] == 0
          and state["count"] == ech.rank == quotient.dim_super)
    report.add("basis", {"products": state["count"], "rank": ech.rank,
                         "dim_super": quotient.dim_super, "flavour": flavour},
               ok,
               witness=None if ok else f"{state['dependent']} dependent products")
    return report


def centrality_report(centers: CenterTable, c_max: int, b_max: int,
                      square_bound: int) -> Report:
    """Centrality suite for c coefficients, even-b coefficients and squares.

    Each element is tested at the largest budget its degree leaves inside
    the cap.  b_i^(1) is asserted to vanish identically; odd b coefficients
    carry no claim and are skipped.
    """
    tab = centers.tab
    alg = tab.alg
    cap = alg.shape.cap
    report = Report("centers-centrality",
                    config={"m": alg.shape.m, "n": alg.shape.n,
                            "c_max": c_max, "b_max": b_max,
                            "square_bound": square_bound})

    for r in range(1, min(c_max, len(centers.c) - 1) + 1):
        x = centers.c[r]
        budget = cap - x.degree()
        sub = is_central(x, budget)
        ok = sub.ok
        report.add("central-c", {"r": r, "budget": budget}, ok,
                   witness=None if ok else sub.failures[0].witness)

    for i, coeffs in sorted(centers.b.items()):
        report.add("b1-vanishes", {"i": i}, not coeffs[1],
                   witness=None if not coeffs[1] else coeffs[1].canonical())
        for two_r in range(2, min(b_max, len(coeffs) - 1) + 1, 2):
            x = coeffs[two_r]
            budget = cap - x.degree()
            sub = is_central(x, budget)
            ok = sub.ok
            report.add("central-b", {"i": i, "2r": two_r, "budget": budget}, ok,
                       witness=None if ok else sub.failures[0].witness)
        # odd coefficients beyond the first carry no claim; record values only
        for odd_r in range(3, min(b_max, len(coeffs) - 1) + 1, 2):
            report.add("b-odd-recorded", {"i": i, "r": odd_r}, True,
                       value=coeffs[odd_r].canonical())

    for sq in centers.squares:
        if 2 * sq.r > square_bound:
            continue
        budget = cap - sq.element.degree()
        sub = is_central(sq.element, budget)
        ok = sub.ok
        report.add("central-square",
                   {"kind": sq.kind, "i": sq.i, "j": sq.j, "r": sq.r,
                    "parity": sq.parity, "budget": budget}, ok,
                   witness=None if ok else sub.failures[0].witness)
    return report
