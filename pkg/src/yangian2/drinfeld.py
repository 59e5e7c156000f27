"""Drinfeld generators, higher root elements and the relation verifier.

The table holds exact normal-form elements for d_i^(r), its inverse-series
coefficients d'_i^(r), and root elements e_(i,j)^(r), f_(j,i)^(r).
Superdiagonal entries come straight from the Gauss decomposition; entries
with j > i + 1 are the inductive brackets

    e_(i,j)^(r) = [e_(i,j-1)^(r), e_(j-1,j)^(1)]
    f_(j,i)^(r) = [f_(j,j-1)^(1), f_(j-1,i)^(r)]

and the table makes no claim that these coincide with the corresponding
Gauss matrix entries (only the bracket versions are stored and used).

Relation families carry frozen identifiers D1..D17.  A family's `text`
renders the identity with every sign already collapsed to + (the ground
field has two elements).  The verification budget bounds the total
canonical degree of every product in an instance: quadratic families
enumerate r+s <= budget, cubic ones r+s+t <= budget, the quartic ones
r+s+2 <= budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeCapError
from .report import Report
from .rtt import Element, RTTAlgebra
from .series import YSeries, gauss_decompose, series_inv, t_matrix

RELATION_TEXT = {
    "D1": "sum_{t=0}^{r} d_i^(t)*d_i'^(r-t) = delta_{r,0},  d_i^(0) = 1",
    "D2": "[d_i^(r), d_j^(s)] = 0",
    "D3": "[d_i^(r), e_j^(s)] = (delta_{i,j}+delta_{i,j+1}) "
          "sum_{t=0}^{r-1} d_i^(t)*e_j^(r+s-1-t)",
    "D4": "[d_i^(r), f_j^(s)] = (delta_{i,j+1}+delta_{i,j}) "
          "sum_{t=0}^{r-1} f_j^(r+s-1-t)*d_i^(t)",
    "D5": "[e_i^(r), f_j^(s)] = delta_{i,j} "
          "sum_{t=0}^{r+s-1} d_i'^(t)*d_(i+1)^(r+s-1-t)",
    "D6": "[e_j^(r), e_j^(s)] = sum_{t=1}^{s-1} e_j^(t)*e_j^(r+s-1-t) "
          "+ sum_{t=1}^{r-1} e_j^(t)*e_j^(r+s-1-t)",
    "D7": "[f_j^(r), f_j^(s)] = sum_{t=1}^{r-1} f_j^(t)*f_j^(r+s-1-t) "
          "+ sum_{t=1}^{s-1} f_j^(t)*f_j^(r+s-1-t)",
    "D8": "[e_j^(r+1), e_(j+1)^(s)] + [e_j^(r), e_(j+1)^(s+1)] "
          "= e_j^(r)*e_(j+1)^(s)",
    "D9": "[f_j^(r+1), f_(j+1)^(s)] + [f_j^(r), f_(j+1)^(s+1)] "
          "= f_(j+1)^(s)*f_j^(r)",
    "D10": "[e_i^(r), e_j^(s)] = 0  for |i-j| > 1",
    "D11": "[f_i^(r), f_j^(s)] = 0  for |i-j| > 1",
    "D12": "[[e_i^(r), e_j^(s)], e_j^(t)] + [[e_i^(r), e_j^(t)], e_j^(s)] = 0 "
           "for |i-j| = 1",
    "D13": "[[f_i^(r), f_j^(s)], f_j^(t)] + [[f_i^(r), f_j^(t)], f_j^(s)] = 0 "
           "for |i-j| = 1",
    "D14": "[[e_i^(r), e_j^(t)], e_j^(t)] = 0  for |i-j| = 1",
    "D15": "[[f_i^(r), f_j^(t)], f_j^(t)] = 0  for |i-j| = 1",
    "D16": "[[e_(i-1)^(r), e_i^(1)], [e_i^(1), e_(i+1)^(s)]] = 0",
    "D17": "[[f_(i-1)^(r), f_i^(1)], [f_i^(1), f_(i+1)^(s)]] = 0",
}

ALL_FAMILIES = tuple(sorted(RELATION_TEXT, key=lambda s: int(s[1:])))


@dataclass
class DrinfeldTable:
    alg: RTTAlgebra
    order: int
    d: dict = field(default_factory=dict)       # i -> {r: Element}, r from 0
    dprime: dict = field(default_factory=dict)  # i -> {r: Element}
    e: dict = field(default_factory=dict)       # (i, j) -> {r: Element}, i < j
    f: dict = field(default_factory=dict)       # (j, i) -> {r: Element}, j > i

    def e_simple(self, i: int, r: int) -> Element:
        return self.e[(i, i + 1)][r]

    def f_simple(self, i: int, r: int) -> Element:
        return self.f[(i + 1, i)][r]

    def parity(self, i: int, j: int) -> int:
        return self.alg.shape.parity(i, j)

    def d_series(self, i: int) -> YSeries:
        return YSeries(self.alg, tuple(self.d[i][r] for r in range(self.order + 1)))

    def dprime_series(self, i: int) -> YSeries:
        return YSeries(self.alg,
                       tuple(self.dprime[i][r] for r in range(self.order + 1)))


def drinfeld_generators(alg: RTTAlgebra, order: int) -> DrinfeldTable:
    """Extract d, d' and the superdiagonal e, f coefficients via Gauss."""
    t = t_matrix(alg, order)
    f_mat, diag, e_mat = gauss_decompose(t)
    tab = DrinfeldTable(alg, order)
    size = alg.shape.size
    for i in range(1, size + 1):
        d = diag[i - 1]
        dinv = series_inv(d)
        tab.d[i] = {r: d.coeffs[r] for r in range(order + 1)}
        tab.dprime[i] = {r: dinv.coeffs[r] for r in range(order + 1)}
    for i in range(1, size):
        tab.e[(i, i + 1)] = {r: e_mat.entry(i, i + 1).coeffs[r]
                             for r in range(1, order + 1)}
        tab.f[(i + 1, i)] = {r: f_mat.entry(i + 1, i).coeffs[r]
                             for r in range(1, order + 1)}
    return tab


def higher_roots(tab: DrinfeldTable, max_r: int | None = None) -> DrinfeldTable:
    """Fill the inductive root elements for all 1 <= i < j <= m+n.

    Brackets raise the canonical degree by one, so superscripts are capped
    at min(order, cap - 1) unless a tighter max_r is requested.
    """
    alg = tab.alg
    size = alg.shape.size
    top = min(tab.order, alg.shape.cap - 1)
    if max_r is not None:
        top = min(top, max_r)
    for span in range(2, size):
        for i in range(1, size - span + 1):
            j = i + span
            tab.e[(i, j)] = {}
            tab.f[(j, i)] = {}
            for r in range(1, top + 1):
                tab.e[(i, j)][r] = alg.commutator(tab.e[(i, j - 1)][r],
                                                  tab.e[(j - 1, j)][1])
                tab.f[(j, i)][r] = alg.commutator(tab.f[(j, j - 1)][1],
                                                  tab.f[(j - 1, i)][r])
    return tab


def build_table(alg: RTTAlgebra, order: int) -> DrinfeldTable:
    return higher_roots(drinfeld_generators(alg, order))


# -- relation instances ------------------------------------------------------


def _superscript_pairs(budget: int):
    for r in range(1, budget):
        for s in range(1, budget - r + 1):
            yield r, s


def _relation_instances(tab: DrinfeldTable, family: str, budget: int):
    """Yield (params, residual_element) for every valid instance of a family."""
    alg = tab.alg
    size = alg.shape.size
    n_ef = size - 1
    com = alg.commutator
    mul = alg.multiply

    if family == "D1":
        for i in range(1, size + 1):
            for r in range(0, min(budget, tab.order) + 1):
                acc = alg.zero()
                for t in range(r + 1):
                    acc = acc + mul(tab.d[i][t], tab.dprime[i][r - t])
                expected = alg.one() if r == 0 else alg.zero()
                yield {"i": i, "r": r}, acc + expected

    elif family == "D2":
        for i in range(1, size + 1):
            for j in range(1, size + 1):
                for r, s in _superscript_pairs(budget):
                    yield ({"i": i, "j": j, "r": r, "s": s},
                           com(tab.d[i][r], tab.d[j][s]))

    elif family in ("D3", "D4"):
        for i in range(1, size + 1):
            for j in range(1, n_ef + 1):
                for r, s in _superscript_pairs(budget):
                    if family == "D3":
                        lhs = com(tab.d[i][r], tab.e_simple(j, s))
                    else:
                        lhs = com(tab.d[i][r], tab.f_simple(j, s))
                    rhs = alg.zero()
                    if i == j or i == j + 1:
                        for t in range(r):
                            if family == "D3":
                                rhs = rhs + mul(tab.d[i][t],
                                                tab.e_simple(j, r + s - 1 - t))
                            else:
                                rhs = rhs + mul(tab.f_simple(j, r + s - 1 - t),
                                                tab.d[i][t])
                    yield {"i": i, "j": j, "r": r, "s": s}, lhs + rhs

    elif family == "D5":
        for i in range(1, n_ef + 1):
            for j in range(1, n_ef + 1):
                for r, s in _superscript_pairs(budget):
                    lhs = com(tab.e_simple(i, r), tab.f_simple(j, s))
                    rhs = alg.zero()
                    if i == j:
                        for t in range(r + s):
                            rhs = rhs + mul(tab.dprime[i][t],
                                            tab.d[i + 1][r + s - 1 - t])
                    yield {"i": i, "j": j, "r": r, "s": s}, lhs + rhs

    elif family in ("D6", "D7"):
        pick = tab.e_simple if family == "D6" else tab.f_simple
        for j in range(1, n_ef + 1):
            for r, s in _superscript_pairs(budget):
                lhs = com(pick(j, r), pick(j, s))
                rhs = alg.zero()
                for t in range(1, s):
                    rhs = rhs + mul(pick(j, t), pick(j, r + s - 1 - t))
                for t in range(1, r):
                    rhs = rhs + mul(pick(j, t), pick(j, r + s - 1 - t))
                yield {"j": j, "r": r, "s": s}, lhs + rhs

    elif family in ("D8", "D9"):
        pick = tab.e_simple if family == "D8" else tab.f_simple
        for j in range(1, n_ef):
            for r in range(1, budget):
                for s in range(1, budget - r):
                    # highest term degree is r + s + 1
                    lhs = (com(pick(j, r + 1), pick(j + 1, s))
                           + com(pick(j, r), pick(j + 1, s + 1)))
                    if family == "D8":
                        rhs = mul(pick(j, r), pick(j + 1, s))
                    else:
                        rhs = mul(pick(j + 1, s), pick(j, r))
                    yield {"j": j, "r": r, "s": s}, lhs + rhs

    elif family in ("D10", "D11"):
        pick = tab.e_simple if family == "D10" else tab.f_simple
        for i in range(1, n_ef + 1):
            for j in range(1, n_ef + 1):
                if abs(i - j) <= 1:
                    continue
                for r, s in _superscript_pairs(budget):
                    yield ({"i": i, "j": j, "r": r, "s": s},
                           com(pick(i, r), pick(j, s)))

    elif family in ("D12", "D13"):
        pick = tab.e_simple if family == "D12" else tab.f_simple
        for i in range(1, n_ef + 1):
            for j in range(1, n_ef + 1):
                if abs(i - j) != 1:
                    continue
                for r in range(1, budget - 1):
                    for s in range(1, budget - r):
                        for t in range(1, budget - r - s + 1):
                            res = (com(com(pick(i, r), pick(j, s)), pick(j, t))
                                   + com(com(pick(i, r), pick(j, t)), pick(j, s)))
                            yield {"i": i, "j": j, "r": r, "s": s, "t": t}, res

    elif family in ("D14", "D15"):
        pick = tab.e_simple if family == "D14" else tab.f_simple
        for i in range(1, n_ef + 1):
            for j in range(1, n_ef + 1):
                if abs(i - j) != 1:
                    continue
                for t in range(1, (budget - 1) // 2 + 1):
                    for r in range(1, budget - 2 * t + 1):
                        res = com(com(pick(i, r), pick(j, t)), pick(j, t))
                        yield {"i": i, "j": j, "r": r, "t": t}, res

    elif family in ("D16", "D17"):
        pick = tab.e_simple if family == "D16" else tab.f_simple
        for i in range(2, n_ef):
            for r in range(1, budget - 2):
                for s in range(1, budget - r - 1):
                    inner_left = com(pick(i - 1, r), pick(i, 1))
                    inner_right = com(pick(i, 1), pick(i + 1, s))
                    yield ({"i": i, "r": r, "s": s},
                           com(inner_left, inner_right))

    else:
        raise ValueError(f"unknown relation family {family}")


def verify_drinfeld_relations(tab: DrinfeldTable, budget: int,
                              families=None) -> Report:
    """Evaluate every relation instance within the degree budget.

    Vacuous families (no valid instance) are reported explicitly so the
    per-family counts always cover D1..D17.
    """
    chosen = ALL_FAMILIES if families is None else tuple(
        f for f in ALL_FAMILIES if f in set(families))
    shape = tab.alg.shape
    if budget > shape.cap:
        raise DegreeCapError(f"budget {budget} exceeds cap {shape.cap}")
    # largest superscript a family can touch at this budget (D1 self-clamps)
    reach = {"D12": 2, "D13": 2, "D14": 2, "D15": 2, "D16": 3, "D17": 3}
    needed = max((budget - reach.get(f, 1) for f in chosen if f != "D1"),
                 default=0)
    if needed > tab.order:
        raise DegreeCapError(
            f"budget {budget} on families {list(chosen)} needs table "
            f"order >= {needed}, have {tab.order}")
    report = Report("drinfeld-relations",
                    config={"m": shape.m, "n": shape.n, "cap": shape.cap,
                            "order": tab.order, "budget": budget,
                            "families": list(chosen)})
    for family in chosen:
        count = 0
        for params, residual in _relation_instances(tab, family, budget):
            count += 1
            ok = not residual
            report.add(family, params, ok,
                       witness=None if ok else residual.canonical(),
                       value=None)
        if count == 0:
            report.add(family, {"instances": 0}, True, value="vacuous")
    return report


def verify_odd_square_relations(tab: DrinfeldTable, budget: int,
                                quotient) -> Report:
    """Check that [e_m^(r), e_m^(s)] and [f_m^(r), f_m^(s)] die in the quotient.

    The quotient model supplies the reduction modulo the odd-square ideal;
    in the parent algebra these brackets are generally nonzero.
    """
    alg = tab.alg
    m = alg.shape.m
    if budget - 1 > tab.order or budget > quotient.bound:
        raise DegreeCapError(
            f"budget {budget} needs table order >= {budget - 1} and "
            f"quotient bound >= {budget}")
    report = Report("odd-square-relations",
                    config={"m": alg.shape.m, "n": alg.shape.n,
                            "budget": budget})
    for kind, pick in (("e", tab.e_simple), ("f", tab.f_simple)):
        for r in range(1, budget):
            for s in range(r, budget - r + 1):
                bracket = alg.commutator(pick(m, r), pick(m, s))
                image = quotient.reduce(bracket)
                ok = not image
                report.add(f"odd-square-{kind}", {"r": r, "s": s}, ok,
                           witness=None if ok else image.canonical())
    return report


def drinfeld_pbw_check(tab: DrinfeldTable, bound: int,
                       super_only: bool = False) -> Report:
    """Rank certificate for ordered Drinfeld (super)monomials of degree <= bound.

    Each monomial in the table generators is expanded to RTT normal form
    and the coefficient matrix against the degree-<=bound PBW basis must
    have full rank (equal to the monomial count; in the plain case that
    count is exactly dim F_bound).
    """
    from .linalg import BitEchelon

    alg = tab.alg
    shape = alg.shape
    if bound > tab.order:
        raise DegreeCapError(
            f"pbw check at bound {bound} needs table order >= {bound}")
    for family in list(tab.e.values()) + list(tab.f.values()):
        if family and max(family) < bound:
            # higher roots stop at cap - 1; an incomplete symbol set would
            # silently undercount the basis
            raise DegreeCapError(
                f"pbw check at bound {bound} needs every root family up to "
                f"superscript {bound}; raise the cap to at least {bound + 1}")

    # Drinfeld generator symbols with a fixed deterministic order.
    symbols: list[tuple] = []
    for i in range(1, shape.size + 1):
        for r in range(1, bound + 1):
            symbols.append(("d", i, i, r))
    for (i, j), by_r in sorted(tab.e.items()):
        for r in sorted(by_r):
            if r <= bound:
                symbols.append(("e", i, j, r))
    for (j, i), by_r in sorted(tab.f.items()):
        for r in sorted(by_r):
            if r <= bound:
                symbols.append(("f", j, i, r))

    def resolve(sym) -> Element:
        kind, a, b, r = sym
        if kind == "d":
            return tab.d[a][r]
        if kind == "e":
            return tab.e[(a, b)][r]
        return tab.f[(a, b)][r]

    def sym_parity(sym) -> int:
        _, a, b, _ = sym
        return shape.parity(a, b)

    monomials: list[tuple] = []

    def rec(k: int, remaining: int, word: tuple) -> None:
        if k == len(symbols):
            monomials.append(word)
            return
        sym = symbols[k]
        deg = sym[3]
        top = remaining // deg
        if super_only and sym_parity(sym):
            top = min(top, 1)
        for mult in range(top + 1):
            rec(k + 1, remaining - mult * deg, word + (sym,) * mult)

    rec(0, bound, ())

    basis = alg.pbw_monomials(bound)
    index = {w: k for k, w in enumerate(basis)}
    ech = BitEchelon()
    dependent = []
    for mono in monomials:
        element = alg.one()
        for sym in mono:
            element = alg.multiply(element, resolve(sym))
        vec = 0
        for w in element.words:
            vec |= 1 << index[w]
        if ech.add(vec) == 0:
            dependent.append(mono)

    report = Report("drinfeld-pbw",
                    config={"m": shape.m, "n": shape.n, "bound": bound,
                            "super": super_only})
    rank_ok = ech.rank == len(monomials)
    report.add("rank", {"monomials": len(monomials), "rank": ech.rank,
                        "dim_full": len(basis)},
               rank_ok,
               witness=None if rank_ok else f"dependent: {dependent[:3]}")
    if not super_only:
        report.add("rank-equals-dim", {"rank": ech.rank, "dim": len(basis)},
                   ech.rank == len(basis))
    return report
