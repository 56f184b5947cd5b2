"""The tetrahedron algebra through its three-point loop realization.

Generators X_ij (i != j in {0,1,2,3}) map into sl2 tensored with the
three-point ring k[t, 1/t, 1/(1-t)]; elements are stored in the equitable
basis x, y, z of sl2, which satisfies [x,y] = 2(x+y), [y,z] = 2(y+z),
[z,x] = 2(z+x).

Two non-adjacent edges generate a copy of the Onsager algebra; the
embedding used here is pinned to the edge pair (1,2), (0,3).  Its image is
the free k[t]-module on

    v_0 = u_0 (t-1),   v_1 = u_1,   v_2 = u_2 t

with the k[t]-bilinear bracket

    [v_0, v_1] = -v_2 (t-1),   [v_1, v_2] = -v_0,   [v_2, v_0] = v_1 t,

so Onsager elements convert to and from coordinate triples over k[t].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import OnsagerElement
from .linalg import solve
from .polynomials import (
    LaurentPoly,
    ThreePointFraction,
    require_polynomial,
)
from .scalars import is_scalar

T = LaurentPoly({1: 1})
T_MINUS_ONE = LaurentPoly({1: 1, 0: -1})
QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class ThreePointElement:
    """cx*x + cy*y + cz*z with three-point fraction coordinates."""

    __slots__ = ("cx", "cy", "cz")

    def __init__(self, cx=None, cy=None, cz=None):
        self.cx = _as_fraction(cx)
        self.cy = _as_fraction(cy)
        self.cz = _as_fraction(cz)

    @property
    def is_zero(self) -> bool:
        return self.cx.is_zero and self.cy.is_zero and self.cz.is_zero

    def __add__(self, other):
        if not isinstance(other, ThreePointElement):
            return NotImplemented
        return ThreePointElement(self.cx + other.cx, self.cy + other.cy, self.cz + other.cz)

    def __sub__(self, other):
        if not isinstance(other, ThreePointElement):
            return NotImplemented
        return ThreePointElement(self.cx - other.cx, self.cy - other.cy, self.cz - other.cz)

    def __neg__(self):
        return ThreePointElement(-self.cx, -self.cy, -self.cz)

    def __rmul__(self, factor):
        if is_scalar(factor) or isinstance(factor, (LaurentPoly, ThreePointFraction)):
            return ThreePointElement(factor * self.cx, factor * self.cy, factor * self.cz)
        return NotImplemented

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, ThreePointElement):
            return NotImplemented
        return self.cx == other.cx and self.cy == other.cy and self.cz == other.cz

    def __bool__(self):
        return not self.is_zero

    def bracket(self, other: "ThreePointElement") -> "ThreePointElement":
        return tp_bracket(self, other)

    def __str__(self):
        return format_tetra(self)

    def __repr__(self):
        return f"ThreePointElement({self.cx!r}, {self.cy!r}, {self.cz!r})"


def _as_fraction(value) -> ThreePointFraction:
    if value is None:
        return ThreePointFraction(LaurentPoly.zero())
    if isinstance(value, ThreePointFraction):
        return value
    return ThreePointFraction(value) if isinstance(value, LaurentPoly) else ThreePointFraction(LaurentPoly.term(value))


TP_ZERO = ThreePointElement()
X_ATOM = ThreePointElement(cx=LaurentPoly.one())
Y_ATOM = ThreePointElement(cy=LaurentPoly.one())
Z_ATOM = ThreePointElement(cz=LaurentPoly.one())


def tp_bracket(a: ThreePointElement, b: ThreePointElement) -> ThreePointElement:
    """Bilinear bracket over the three-point ring via the equitable constants."""
    pxy = a.cx * b.cy - a.cy * b.cx
    pyz = a.cy * b.cz - a.cz * b.cy
    pzx = a.cz * b.cx - a.cx * b.cz
    two = Fraction(2)
    return ThreePointElement(
        two * (pxy + pzx),
        two * (pxy + pyz),
        two * (pyz + pzx),
    )


# Images of the six forward generators; the reversed pairs are negatives.
_T_PRIME = ThreePointFraction(T_MINUS_ONE, 1, 0)          # 1 - 1/t
_T_PRIME_MINUS_ONE = ThreePointFraction(LaurentPoly.term(-1), 1, 0)   # -1/t
_T_DPRIME = ThreePointFraction(LaurentPoly.one(), 0, 1)   # 1/(1-t)
_T_DPRIME_MINUS_ONE = ThreePointFraction(T, 0, 1)         # t/(1-t)

_PSI_TABLE = {
    (1, 2): ThreePointElement(cx=LaurentPoly.one()),
    (2, 3): ThreePointElement(cy=LaurentPoly.one()),
    (3, 1): ThreePointElement(cz=LaurentPoly.one()),
    (0, 3): ThreePointElement(cy=T, cz=T_MINUS_ONE),
    (0, 1): ThreePointElement(cx=_T_PRIME_MINUS_ONE, cz=_T_PRIME),
    (0, 2): ThreePointElement(cx=_T_DPRIME, cy=_T_DPRIME_MINUS_ONE),
}


def psi_generator(i: int, j: int) -> ThreePointElement:
    """The image of the generator X_ij; X_ji maps to the negative."""
    if i == j:
        raise ValueError("generator indices must differ")
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise ValueError("generator indices must lie in {0,1,2,3}")
    if (i, j) in _PSI_TABLE:
        return _PSI_TABLE[(i, j)]
    return -_PSI_TABLE[(j, i)]


@lru_cache(maxsize=1)
def u_elements() -> tuple[ThreePointElement, ThreePointElement, ThreePointElement]:
    """The generating triple u_0, u_1, u_2 of the three-point algebra."""
    u0 = QUARTER * (psi_generator(0, 2) + psi_generator(3, 1))
    u1 = QUARTER * (psi_generator(0, 3) + psi_generator(1, 2))
    u2 = QUARTER * (psi_generator(0, 1) + psi_generator(2, 3))
    return u0, u1, u2


@lru_cache(maxsize=1)
def v_elements() -> tuple[ThreePointElement, ThreePointElement, ThreePointElement]:
    """v_0 = u_0(t-1), v_1 = u_1, v_2 = u_2 t: a free k[t]-module basis."""
    u0, u1, u2 = u_elements()
    return T_MINUS_ONE * u0, u1, T * u2


class VElement:
    """Coordinates (q0, q1, q2) over k[t] in the basis v_0, v_1, v_2."""

    __slots__ = ("q0", "q1", "q2")

    def __init__(self, q0=None, q1=None, q2=None):
        self.q0 = _as_poly_coord(q0, "v_0")
        self.q1 = _as_poly_coord(q1, "v_1")
        self.q2 = _as_poly_coord(q2, "v_2")

    @property
    def is_zero(self) -> bool:
        return self.q0.is_zero and self.q1.is_zero and self.q2.is_zero

    def coords(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
        return self.q0, self.q1, self.q2

    def __add__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        return VElement(self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2)

    def __sub__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        return VElement(self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2)

    def __neg__(self):
        return VElement(-self.q0, -self.q1, -self.q2)

    def __rmul__(self, factor):
        if is_scalar(factor) or isinstance(factor, LaurentPoly):
            return VElement(factor * self.q0, factor * self.q1, factor * self.q2)
        return NotImplemented

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        return self.q0 == other.q0 and self.q1 == other.q1 and self.q2 == other.q2

    def __bool__(self):
        return not self.is_zero

    def bracket(self, other: "VElement") -> "VElement":
        return v_bracket(self, other)

    def __str__(self):
        return format_v(self)

    def __repr__(self):
        return f"VElement({self.q0!r}, {self.q1!r}, {self.q2!r})"


def _as_poly_coord(value, which: str) -> LaurentPoly:
    if value is None:
        return LaurentPoly.zero()
    if is_scalar(value):
        value = LaurentPoly.term(value)
    if not isinstance(value, LaurentPoly):
        raise TypeError(f"{which} coordinate must be a polynomial")
    return require_polynomial(value, f"{which} coordinate")


V_ZERO = VElement()


def v_bracket(a: VElement, b: VElement) -> VElement:
    """k[t]-bilinear extension of the v-basis relations."""
    wedge01 = a.q0 * b.q1 - a.q1 * b.q0
    wedge12 = a.q1 * b.q2 - a.q2 * b.q1
    wedge20 = a.q2 * b.q0 - a.q0 * b.q2
    return VElement(-wedge12, T * wedge20, -(T_MINUS_ONE) * wedge01)


def from_v(v: VElement) -> ThreePointElement:
    """Expand coordinates against the stored v-basis elements."""
    v0, v1, v2 = v_elements()
    return v.q0 * v0 + v.q1 * v1 + v.q2 * v2


def to_v(element: ThreePointElement) -> VElement:
    """Coordinates of a three-point element in the free module on v_0, v_1, v_2.

    Inverts the 3x3 change of basis between the equitable coordinates and
    the v-basis; inputs outside the module raise, naming the coordinate
    that fails to land in k[t].
    """
    cy_over_t = element.cy.div_t()
    cz_over = -(element.cz.div_one_minus_t())
    four_cx = Fraction(4) * element.cx
    q0 = Fraction(2) * (cz_over - cy_over_t)
    q2 = Fraction(2) * (cy_over_t - element.cx)
    q1 = four_cx + q0 + q2
    coords = []
    for name, frac in (("v_0", q0), ("v_1", q1), ("v_2", q2)):
        if frac.a != 0 or frac.b != 0:
            raise ValueError(f"element lies outside the v-module: {name} coordinate is not in k[t]")
        coords.append(frac.num)
    result = VElement(*coords)
    return result


# --- The Onsager embedding pinned to the edge pair (1,2), (0,3). ---


@lru_cache(maxsize=None)
def _phi_a(m: int) -> VElement:
    if m == 0:
        return VElement(None, 2, -2)
    if m == 1:
        return VElement(None, 2, 2)
    g1 = _phi_g(1)
    if m > 1:
        return _phi_a(m - 2) + v_bracket(g1, _phi_a(m - 1))
    return _phi_a(m + 2) - v_bracket(g1, _phi_a(m + 1))


@lru_cache(maxsize=None)
def _phi_g(l: int) -> VElement:
    if l < 1:
        raise ValueError("G-index must be positive")
    return HALF * v_bracket(_phi_a(l), _phi_a(0))


def phi_v(x: OnsagerElement) -> VElement:
    """The embedding into v-coordinates: linear extension over basis images."""
    out = V_ZERO
    for m, c in x.a_terms.items():
        out = out + c * _phi_a(m)
    for l, c in x.g_terms.items():
        out = out + c * _phi_g(l)
    return out


def phi(x: OnsagerElement) -> ThreePointElement:
    """The embedding of the Onsager algebra into the three-point algebra."""
    return from_v(phi_v(x))


def phi_inverse(v: VElement) -> OnsagerElement:
    """Invert the embedding on the v-module.

    The v_1/v_2 lanes are spanned by images of iterated ad_{G_1} applied to
    A_0 + A_1 and A_0 - A_1 (one leading degree each), and the v_0 lane by
    the G_l images, so two exact triangular solves recover the preimage.
    """
    from .core import A, G, ZERO, bracket

    result = ZERO
    deg12 = -1
    for lane in (v.q1, v.q2):
        if not lane.is_zero:
            deg12 = max(deg12, lane.degree)
    if deg12 >= 0:
        plus = A(0) + A(1)
        minus = A(0) - A(1)
        g1 = G(1)
        candidates = []
        for _ in range(deg12 + 1):
            candidates.append(plus)
            candidates.append(minus)
            plus = bracket(g1, plus)
            minus = bracket(g1, minus)
        columns = [phi_v(c) for c in candidates]
        matrix = []
        for d in range(deg12 + 1):
            matrix.append([col.q1.coeff(d) for col in columns])
        for d in range(deg12 + 1):
            matrix.append([col.q2.coeff(d) for col in columns])
        rhs = [v.q1.coeff(d) for d in range(deg12 + 1)] + [
            v.q2.coeff(d) for d in range(deg12 + 1)
        ]
        weights = solve(matrix, rhs)
        if weights is None:
            raise ValueError("v-element is not in the image of the embedding")
        for w, cand in zip(weights, candidates):
            if w != 0:
                result = result + w * cand
    if not v.q0.is_zero:
        deg0 = v.q0.degree
        g_candidates = [G(l) for l in range(1, deg0 + 2)]
        g_columns = [phi_v(c) for c in g_candidates]
        matrix = [[col.q0.coeff(d) for col in g_columns] for d in range(deg0 + 1)]
        rhs = [v.q0.coeff(d) for d in range(deg0 + 1)]
        weights = solve(matrix, rhs)
        if weights is None:
            raise ValueError("v-element is not in the image of the embedding")
        for w, cand in zip(weights, g_candidates):
            if w != 0:
                result = result + w * cand
    assert phi_v(result) == v
    return result


# --- Relation verification and the linear-independence witness. ---


@dataclass(frozen=True)
class CheckRecord:
    name: str
    detail: str
    ok: bool
    defect: str = ""


@dataclass(frozen=True)
class VerificationReport:
    records: tuple

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.records)


def verify_tetra_relations() -> VerificationReport:
    """Check every generator-relation instance under the realization map."""
    records = []
    indices = range(4)
    for i in indices:
        for j in indices:
            if i < j:
                defect = psi_generator(i, j) + psi_generator(j, i)
                records.append(
                    CheckRecord("antisymmetry", f"X_{i}{j} + X_{j}{i}", defect.is_zero, _fmt_defect(defect))
                )
    for i in indices:
        for j in indices:
            for k in indices:
                if len({i, j, k}) == 3:
                    a = psi_generator(i, j)
                    b = psi_generator(j, k)
                    defect = tp_bracket(a, b) - 2 * (a + b)
                    records.append(
                        CheckRecord(
                            "adjacent-edges", f"[X_{i}{j}, X_{j}{k}] = 2(X_{i}{j} + X_{j}{k})",
                            defect.is_zero, _fmt_defect(defect),
                        )
                    )
    for h in indices:
        for i in indices:
            for j in indices:
                for k in indices:
                    if len({h, i, j, k}) == 4:
                        a = psi_generator(h, i)
                        b = psi_generator(j, k)
                        ab = tp_bracket(a, b)
                        defect = tp_bracket(a, tp_bracket(a, ab)) - 4 * ab
                        records.append(
                            CheckRecord(
                                "opposite-edges",
                                f"[X_{h}{i},[X_{h}{i},[X_{h}{i},X_{j}{k}]]] = 4[X_{h}{i},X_{j}{k}]",
                                defect.is_zero, _fmt_defect(defect),
                            )
                        )
    for face in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        h, i, j = face
        ok = True
        for a_pair, b_pair in (((h, i), (i, j)), ((i, j), (j, h)), ((j, h), (h, i))):
            a = psi_generator(*a_pair)
            b = psi_generator(*b_pair)
            if not (tp_bracket(a, b) - 2 * (a + b)).is_zero:
                ok = False
        records.append(CheckRecord("face-equitable", f"face {{{h},{i},{j}}}", ok))
    return VerificationReport(tuple(records))


def _fmt_defect(defect) -> str:
    return "" if defect.is_zero else str(defect)


@dataclass(frozen=True)
class WitnessEntry:
    start: str
    power: int
    lane: str
    degree: int
    leading: object
    element: VElement


@dataclass(frozen=True)
class IndependenceWitness:
    entries: tuple
    leading_monomials_distinct: bool


def independence_witness(max_m: int) -> IndependenceWitness:
    """Iterate ad of v_0 = u_0(t-1) on u_1 and u_2*t and track leading terms.

    Every iterate stays in a single v-module lane (v_1 or v_2), alternating
    with each application, and the leading monomials are pairwise distinct
    on the window, which witnesses linear independence of the images.
    """
    v0 = VElement(LaurentPoly.one(), None, None)
    entries = []
    for start_name, start in (("u_1", VElement(None, LaurentPoly.one(), None)),
                              ("u_2*t", VElement(None, None, LaurentPoly.one()))):
        current = start
        for m in range(max_m + 1):
            if not current.q0.is_zero:
                raise AssertionError("iterate left the v_1/v_2 lanes")
            if not current.q1.is_zero and not current.q2.is_zero:
                raise AssertionError("iterate is not lane-pure")
            lane, poly = ("v_1", current.q1) if not current.q1.is_zero else ("v_2", current.q2)
            entries.append(
                WitnessEntry(start_name, m, lane, poly.degree, poly.coeff(poly.degree), current)
            )
            current = v_bracket(v0, current)
    seen = {(e.lane, e.degree) for e in entries}
    return IndependenceWitness(tuple(entries), len(seen) == len(entries))


def format_tetra(e: ThreePointElement) -> str:
    """Canonical text on the atoms x, y, z with three-point coefficients."""
    if e.is_zero:
        return "0"
    chunks = []
    for atom, coeff in (("x", e.cx), ("y", e.cy), ("z", e.cz)):
        if coeff.is_zero:
            continue
        body, negative = _format_tp_coeff_atom(coeff, atom)
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


def _format_tp_coeff_atom(coeff: ThreePointFraction, atom: str):
    from .loop import _format_coeff_atom

    if coeff.b == 0:
        return _format_coeff_atom(coeff.to_laurent(), atom)
    return f"({coeff})*{atom}", False


def format_v(v: VElement) -> str:
    """Canonical text on the atoms v_0, v_1, v_2 with k[t] coefficients."""
    if v.is_zero:
        return "0"
    from .loop import _format_coeff_atom

    chunks = []
    for atom, poly in (("v_0", v.q0), ("v_1", v.q1), ("v_2", v.q2)):
        if poly.is_zero:
            continue
        body, negative = _format_coeff_atom(poly, atom)
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)
