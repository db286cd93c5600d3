"""Named elements attached to a composition, as executable constructions.

Everything here is a finite, exactly checkable computation:

* ``kappa_bundle``: the dominant-cell element kappa built from the tableau
  colorings, together with its translation part tau_q and finite part sigma,
  tied together by kappa = tau_q * sigma and by tau_q being the minimal
  coset representative of kappa modulo the finite Weyl group.
* ``richardson_element``: the block nilpotent Z whose orbit is dense in the
  nilradical; it shifts each tableau column down by one.
* ``varpi_witness``: explicit matrices b, c in the standard Iwahori with
  b (1 - t^-1 Z) c equal to a monomial lift of the cell element varpi.
  The corner column of c uses the index that makes the identity hold
  exactly; a deliberately wrong variant is kept for tests.
* ``decompose_varpi``: finite w_g and block-preserving w_p with
  varpi = w_g * kappa * w_p, exactly.
* ``check_kappa``: minimality in its coset, left stability under the finite
  simple reflections, and the closed-form length with its correction term.
* ``divisor_data`` and ``divisor_witnesses``: the codimension-one data: the
  reflection index k = n - d_i, the root gamma spanning the conormal
  directions, the antidiagonal element v_k, and the diagonal/elementary
  matrices that reduce a conormal point to the monomial matrix of the
  minimal representative of v_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import affine
from .affine import AffinePermutation, Root, Side
from .errors import BadDivisorIndex, IdentityFailed
from .laurent import (
    BOREL_PLUS,
    LaurentMatrix,
    LaurentPoly,
    borel_membership,
    det,
)
from .partitions import Composition
from .tableau import Tableau, build

__all__ = [
    "KappaBundle",
    "VarpiWitness",
    "KappaReport",
    "DivisorBundle",
    "DivisorWitnesses",
    "dim_g_mod_p",
    "parabolic_subset",
    "finite_subset",
    "kappa_bundle",
    "richardson_element",
    "varpi_witness",
    "decompose_varpi",
    "check_kappa",
    "conormal_directions",
    "longest_min_rep",
    "divisor_data",
    "divisor_witnesses",
    "lift_finite",
]


def dim_g_mod_p(lam: Composition) -> int:
    """dim G/P = (n^2 - sum lambda_i^2) / 2 for the block-parabolic of shape lambda."""
    n = lam.n
    return (n * n - sum(p * p for p in lam.parts)) // 2


def parabolic_subset(lam: Composition) -> frozenset[int]:
    """Simple-root indices of the finite parabolic: all of 1..n-1 except the d_i."""
    cuts = set(lam.d[1:-1])
    return frozenset(i for i in range(1, lam.n) if i not in cuts)


def finite_subset(n: int) -> frozenset[int]:
    """The finite simple roots 1..n-1 (the arc complement of node 0)."""
    return frozenset(range(1, n))


@dataclass(frozen=True)
class KappaBundle:
    lam: Composition
    tableau: Tableau
    kappa: AffinePermutation
    tau_q: AffinePermutation
    sigma: AffinePermutation


def kappa_bundle(lam: Composition) -> KappaBundle:
    """kappa and its translation/finite parts, with the bundle identities checked.

    kappa has matrix sum_i t^{nu_i - 1} E_{i, l(i)} + sum_i t^-1 E_{i+s, m(i)};
    tau_q is its diagonal of t-orders and sigma the underlying permutation,
    so that kappa = tau_q * sigma with the translation acting first... rather,
    multiplied on the left.
    """
    tab = build(lam)
    n, s = lam.n, tab.s
    nu = tab.nu
    entries = {}
    for i in range(1, s + 1):
        entries[(i, tab.l[i - 1])] = LaurentPoly.t(nu.part(i) - 1)
    for i, target in enumerate(tab.m, start=1):
        entries[(i + s, target)] = LaurentPoly.t(-1)
    kappa = affine.from_matrix(LaurentMatrix.from_entries(n, entries))

    q = [nu.part(i) - 1 for i in range(1, s + 1)] + [-1] * (n - s)
    tau_q = affine.translation(n, q)

    sigma_entries = {(i, tab.l[i - 1]): LaurentPoly.one() for i in range(1, s + 1)}
    for i, target in enumerate(tab.m, start=1):
        sigma_entries[(i + s, target)] = LaurentPoly.one()
    sigma = affine.from_matrix(LaurentMatrix.from_entries(n, sigma_entries))

    if tau_q * sigma != kappa:
        raise IdentityFailed("kappa != tau_q * sigma")
    if affine.min_coset_rep(kappa, finite_subset(n), Side.RIGHT) != tau_q:
        raise IdentityFailed("tau_q is not the minimal representative of kappa")
    return KappaBundle(lam=lam, tableau=tab, kappa=kappa, tau_q=tau_q, sigma=sigma)


def richardson_element(lam: Composition) -> LaurentMatrix:
    """The dense-orbit nilpotent Z = sum over columns of down-shift maps.

    Z sends the basis vector at f[i, j] to the one at f[i, j-1] (0 for j = 1),
    so each tableau column contributes one Jordan block of its height.
    """
    tab = build(lam)
    n = lam.n
    entries = {}
    for i in range(1, tab.s + 1):
        for j in range(1, tab.nu.part(i)):
            entries[(tab.f[(i, j)], tab.f[(i, j + 1)])] = LaurentPoly.one()
    return (
        LaurentMatrix.from_entries(n, entries) if entries else LaurentMatrix.zero(n)
    )


@dataclass(frozen=True)
class VarpiWitness:
    varpi: AffinePermutation
    lift: LaurentMatrix
    b: LaurentMatrix
    c: LaurentMatrix


def _b_matrix(tab: Tableau) -> LaurentMatrix:
    entries = {}
    for i in range(1, tab.s + 1):
        h = tab.nu.part(i)
        for j in range(1, h + 1):
            for k in range(j, h + 1):
                entries[(tab.f[(i, k)], tab.f[(i, j)])] = LaurentPoly.t(k - j)
    return LaurentMatrix.from_entries(tab.n, entries)


def _c_matrix(tab: Tableau, corner_row_offset: int = 0) -> LaurentMatrix:
    """c = sum_i (diagonal of column i) + sum_{j>=2} t^{j-1} F^i_{j - offset, 1}.

    offset 0 is the correct corner column; offset 1 is the broken variant
    retained as a negative control (it destroys the product identity and
    even the determinant).
    """
    entries = {}
    for i in range(1, tab.s + 1):
        h = tab.nu.part(i)
        for j in range(1, h + 1):
            key = (tab.f[(i, j)], tab.f[(i, j)])
            entries[key] = entries.get(key, LaurentPoly.zero()) + LaurentPoly.one()
        for j in range(2, h + 1):
            key = (tab.f[(i, j - corner_row_offset)], tab.f[(i, 1)])
            entries[key] = entries.get(key, LaurentPoly.zero()) + LaurentPoly.t(j - 1)
    return LaurentMatrix.from_entries(tab.n, entries)


def _varpi_lift(tab: Tableau) -> LaurentMatrix:
    entries = {}
    for i in range(1, tab.s + 1):
        h = tab.nu.part(i)
        key = (tab.f[(i, h)], tab.f[(i, 1)])
        entries[key] = entries.get(key, LaurentPoly.zero()) + LaurentPoly.t(h - 1)
        for j in range(2, h + 1):
            key = (tab.f[(i, j - 1)], tab.f[(i, j)])
            entries[key] = entries.get(key, LaurentPoly.zero()) - LaurentPoly.t(-1)
    return LaurentMatrix.from_entries(tab.n, entries)


def varpi_witness(lam: Composition) -> VarpiWitness:
    """The cell certificate b (1 - t^-1 Z) c = lift, checked exactly.

    Both b and c are certified members of the standard Iwahori; the lift is
    a monomial matrix whose normalized form is the element varpi.  Raises
    IdentityFailed when the exact product does not match, which would mean
    the construction itself is wrong, not the input.
    """
    tab = build(lam)
    n = lam.n
    b = _b_matrix(tab)
    c = _c_matrix(tab)
    lift = _varpi_lift(tab)
    z = richardson_element(lam)
    point = LaurentMatrix.identity(n) - z.scale_t(-1)
    if b * point * c != lift:
        raise IdentityFailed("b (1 - t^-1 Z) c does not equal the varpi lift")
    if BOREL_PLUS not in borel_membership(b) or BOREL_PLUS not in borel_membership(c):
        raise IdentityFailed("witness matrices must lie in the standard Iwahori")
    return VarpiWitness(varpi=affine.from_matrix(lift), lift=lift, b=b, c=c)


def broken_corner_witness(lam: Composition) -> bool:
    """Whether the off-by-one corner-column variant of c still satisfies the
    product identity.  Kept as a negative control; expected False whenever
    some column has height at least 2."""
    tab = build(lam)
    n = lam.n
    c_bad = _c_matrix(tab, corner_row_offset=1)
    z = richardson_element(lam)
    point = LaurentMatrix.identity(n) - z.scale_t(-1)
    return _b_matrix(tab) * point * c_bad == _varpi_lift(tab)


def decompose_varpi(lam: Composition) -> tuple[AffinePermutation, AffinePermutation]:
    """Finite w_g and block-preserving w_p with varpi = w_g * kappa * w_p.

    w_g sends i to the bottom entry of column i (and i+s to the upstairs
    neighbor of the row-aligned enumeration); w_p carries the top-of-column
    entries to the red enumeration and the row-aligned enumeration to the
    blue one, so it preserves every row block.  Both the product identity
    and the block-preservation are verified exactly.
    """
    tab = build(lam)
    n, s = lam.n, tab.s
    wg_entries = {(tab.f[(i, tab.nu.part(i))], i): LaurentPoly.one() for i in range(1, s + 1)}
    for i in range(1, n - s + 1):
        wg_entries[(tab.iota[tab.tmap[i - 1]], i + s)] = LaurentPoly.one()
    w_g = affine.from_matrix(LaurentMatrix.from_entries(n, wg_entries))

    wp_entries = {(tab.l[i - 1], tab.f[(i, 1)]): LaurentPoly.one() for i in range(1, s + 1)}
    for i in range(1, n - s + 1):
        wp_entries[(tab.m[i - 1], tab.tmap[i - 1])] = LaurentPoly.one()
    w_p = affine.from_matrix(LaurentMatrix.from_entries(n, wp_entries))

    if not w_g.is_finite():
        raise IdentityFailed("w_g must be finite")
    for i in range(1, lam.r + 1):
        block = set(lam.row(i))
        if any(w_p(j) not in block for j in block):
            raise IdentityFailed("w_p must preserve the row blocks")

    bundle = kappa_bundle(lam)
    varpi = varpi_witness(lam).varpi
    if w_g * bundle.kappa * w_p != varpi:
        raise IdentityFailed("w_g * kappa * w_p != varpi")
    return w_g, w_p


@dataclass(frozen=True)
class KappaReport:
    in_min_reps: bool
    left_stable: bool
    length: int
    length_formula: int
    is_compactification: bool

    @property
    def lengths_match(self) -> bool:
        return self.length == self.length_formula


def check_kappa(lam: Composition) -> KappaReport:
    """Minimality, left stability, and the closed-form length of kappa.

    * in_min_reps: kappa * s_i > kappa for every i in the block parabolic.
    * left_stable: for every finite i, s_i * kappa either descends or has the
      same minimal representative modulo the block parabolic.
    * length vs formula: l(kappa) against 2 dim G/P plus the sum of
      |row k| * |blue k'| over k' < k, both sides computed independently.
    * is_compactification: the two lengths agree with no correction term
      exactly when the composition has two parts.
    """
    bundle = kappa_bundle(lam)
    tab = bundle.tableau
    kappa = bundle.kappa
    n = lam.n
    sp = parabolic_subset(lam)
    lk = kappa.length()

    in_min_reps = all(
        (kappa * affine.simple_reflection(n, i)).length() > lk for i in sp
    ) if n >= 2 else True

    left_stable = True
    kappa_min = affine.min_coset_rep(kappa, sp, Side.RIGHT)
    for i in range(1, n):
        sk = affine.simple_reflection(n, i) * kappa
        if sk.length() < lk:
            continue
        if affine.min_coset_rep(sk, sp, Side.RIGHT) != kappa_min:
            left_stable = False
            break

    correction = 0
    for k in range(1, lam.r + 1):
        for kp in range(1, k):
            correction += len(lam.row(k)) * len(tab.blue[kp])
    formula = 2 * dim_g_mod_p(lam) + correction

    return KappaReport(
        in_min_reps=in_min_reps,
        left_stable=left_stable,
        length=lk,
        length_formula=formula,
        is_compactification=(lk == 2 * dim_g_mod_p(lam)),
    )


def conormal_directions(w: AffinePermutation, sp: frozenset[int]) -> frozenset[Root]:
    """Positive finite roots outside the parabolic that w keeps positive.

    These span the conormal fiber directions over the translate by w of the
    base point.  w must be finite.
    """
    if not w.is_finite():
        raise ValueError("conormal_directions expects a finite element")
    n = w.n
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if _in_parabolic(a, b, sp):
                continue
            if affine.act_on_root(w, Root(a, b, n)).positive:
                out.append(Root(a, b, n))
    return frozenset(out)


def _in_parabolic(a: int, b: int, sp: frozenset[int]) -> bool:
    """Whether the root (a, b) is a sum of simple roots indexed by sp."""
    return all(i in sp for i in range(a, b))


def longest_min_rep(lam: Composition) -> AffinePermutation:
    """The longest minimal coset representative: block anti-diagonal identity
    blocks, sending block i of columns to block i of rows counted from the
    bottom."""
    n = lam.n
    d = lam.d
    window = [0] * n
    for i in range(1, lam.r + 1):
        for a in range(1, lam.parts[i - 1] + 1):
            window[d[i - 1] + a - 1] = n - d[i] + a
    return AffinePermutation(tuple(window))


def lift_finite(w: AffinePermutation) -> LaurentMatrix:
    """A determinant-one constant monomial lift of a finite element.

    The permutation matrix gets its first column negated when the sign of
    the permutation is -1; any other sign placement differs by a torus
    element and lands in the same cells.
    """
    if not w.is_finite():
        raise ValueError("lift_finite expects a finite element")
    n = w.n
    entries = {(w(j), j): LaurentPoly.one() for j in range(1, n + 1)}
    M = LaurentMatrix.from_entries(n, entries)
    d = det(M)
    if d == LaurentPoly.one():
        return M
    entries[(w(1), 1)] = -LaurentPoly.one()
    M = LaurentMatrix.from_entries(n, entries)
    if det(M) != LaurentPoly.one():
        raise IdentityFailed("could not normalize lift to determinant one")
    return M


@dataclass(frozen=True)
class DivisorBundle:
    i: int
    k: int
    w: AffinePermutation
    lift: LaurentMatrix
    gamma: Root
    v_k: AffinePermutation
    v_k_min: AffinePermutation


def divisor_data(lam: Composition, i: int) -> DivisorBundle:
    """All data attached to the i-th codimension-one stratum, verified.

    Checks performed at construction: det(lift) = 1, the conormal directions
    of w = s_k * longest_min_rep reduce to {gamma}, and the minimal
    representative of v_k has length dim G/P.
    """
    if not 1 <= i <= lam.r - 1:
        raise BadDivisorIndex(f"divisor index {i} for a {lam.r}-part composition")
    n = lam.n
    d = lam.d
    k = n - d[i]
    w0p = longest_min_rep(lam)
    w = affine.simple_reflection(n, k) * w0p
    gamma = Root(d[i - 1] + 1, d[i + 1], n)

    lift = _divisor_lift(lam, i)
    if det(lift) != LaurentPoly.one():
        raise IdentityFailed("divisor lift must have determinant one")
    if affine.from_matrix(lift) != w:
        raise IdentityFailed("divisor lift does not lift s_k * longest_min_rep")

    entries = {}
    for idx in range(1, n + 1):
        if idx == k:
            a = LaurentPoly.t(-1)
        elif idx == k + 1:
            a = LaurentPoly.t(1)
        else:
            a = LaurentPoly.one()
        entries[(idx, n + 1 - idx)] = a
    v_k = affine.from_matrix(LaurentMatrix.from_entries(n, entries))
    v_k_min = affine.min_coset_rep(v_k, parabolic_subset(lam), Side.RIGHT)

    sp = parabolic_subset(lam)
    if conormal_directions(w, sp) != frozenset({gamma}):
        raise IdentityFailed("conormal directions of the divisor are not {gamma}")
    if v_k_min.length() != dim_g_mod_p(lam):
        raise IdentityFailed("minimal representative length must be dim G/P")

    return DivisorBundle(i=i, k=k, w=w, lift=lift, gamma=gamma, v_k=v_k, v_k_min=v_k_min)


def _divisor_lift(lam: Composition, i: int) -> LaurentMatrix:
    """Signed monomial lift of s_k * longest_min_rep with the sign at
    position (n - d_i, d_{i-1} + 1), chosen so the determinant is one."""
    n = lam.n
    d = lam.d
    w0p = longest_min_rep(lam)
    k = n - d[i]
    w = affine.simple_reflection(n, k) * w0p
    for sign in (1, -1):
        entries = {}
        for j in range(1, n + 1):
            coeff = LaurentPoly.one()
            if (w(j), j) == (n - d[i], d[i - 1] + 1):
                coeff = coeff.scale(sign)
            entries[(w(j), j)] = coeff
        M = LaurentMatrix.from_entries(n, entries)
        if det(M) == LaurentPoly.one():
            return M
    raise IdentityFailed("no sign placement gives determinant one")


@dataclass(frozen=True)
class DivisorWitnesses:
    b1: LaurentMatrix
    b2: LaurentMatrix
    b3: LaurentMatrix
    reduced: LaurentMatrix


def divisor_witnesses(lam: Composition, i: int, a: Fraction) -> DivisorWitnesses:
    """The explicit Iwahori witnesses reducing the conormal point to a
    monomial matrix.

    For the point lift * (1 - a t^-1 E_gamma) with a != 0, the product
    b1 * b2 * lift * (1 - a t^-1 E_gamma) * b3 is a monomial matrix whose
    normalized form is the minimal representative of v_k.  The construction
    raises IdentityFailed if that fails, since it certifies the cell.
    """
    a = Fraction(a)
    if a == 0:
        raise ValueError("witness scale a must be nonzero")
    data = divisor_data(lam, i)
    n = lam.n
    d = lam.d
    k = data.k
    e_sign = data.lift.entry(n - d[i], d[i - 1] + 1).trailing_coeff()

    b2 = LaurentMatrix.identity(n) + unit(n, k + 1, k, LaurentPoly.t(1).scale(e_sign / a))
    b3 = LaurentMatrix.identity(n) + unit(n, d[i + 1], d[i - 1] + 1, LaurentPoly.t(1).scale(1 / a))
    diag = []
    for idx in range(1, n + 1):
        if idx == k:
            diag.append(LaurentPoly.constant(e_sign / a))
        elif idx == k + 1:
            diag.append(LaurentPoly.constant(e_sign * a))
        else:
            diag.append(LaurentPoly.one())
    b1 = LaurentMatrix.diagonal(diag)

    point = data.lift * (
        LaurentMatrix.identity(n)
        - unit(n, data.gamma.i, data.gamma.j, LaurentPoly.t(-1).scale(a))
    )
    reduced = b1 * b2 * point * b3
    if affine.from_matrix(reduced) != data.v_k_min:
        raise IdentityFailed("witness reduction does not produce v_k's representative")
    return DivisorWitnesses(b1=b1, b2=b2, b3=b3, reduced=reduced)


def unit(n: int, i: int, j: int, p: LaurentPoly) -> LaurentMatrix:
    """p * E_{i,j}, 1-based."""
    return LaurentMatrix.from_entries(n, {(i, j): p})
