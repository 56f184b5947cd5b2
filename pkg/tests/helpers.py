"""Shared deterministic generators and window-subspace oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from onsager.core import OnsagerElement
from onsager.linalg import nullspace, subspace_equal
from onsager.loop import LoopElement, basis_b, basis_c, loop_bracket
from onsager.polynomials import LaurentPoly, poly_mod
from onsager.tetra import VElement


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_fraction(r: random.Random, span: int = 9) -> Fraction:
    return Fraction(r.randint(-span, span), r.randint(1, span))


def random_laurent(r: random.Random, lo: int = -4, hi: int = 4, density: float = 0.6) -> LaurentPoly:
    return LaurentPoly(
        {e: random_fraction(r) for e in range(lo, hi + 1) if r.random() < density}
    )


def random_polynomial(r: random.Random, degree: int = 4) -> LaurentPoly:
    return random_laurent(r, 0, degree)


def random_onsager(r: random.Random, span: int = 5) -> OnsagerElement:
    a = {m: random_fraction(r) for m in range(-span, span + 1) if r.random() < 0.4}
    g = {l: random_fraction(r) for l in range(1, span + 1) if r.random() < 0.4}
    return OnsagerElement(a, g)


def random_loop(r: random.Random, span: int = 4) -> LoopElement:
    return LoopElement(
        random_laurent(r, -span, span),
        random_laurent(r, -span, span),
        random_laurent(r, -span, span),
    )


def random_fixed_loop(r: random.Random, span: int = 4) -> LoopElement:
    """A random element of the fixed subalgebra, built from the b/c basis."""
    out = LoopElement()
    for m in range(-span, span + 1):
        if r.random() < 0.4:
            out = out + random_fraction(r) * basis_b(m)
    for l in range(1, span + 1):
        if r.random() < 0.4:
            out = out + random_fraction(r) * basis_c(l)
    return out


def random_velement(r: random.Random, degree: int = 3) -> VElement:
    return VElement(
        random_polynomial(r, degree),
        random_polynomial(r, degree),
        random_polynomial(r, degree),
    )


# --- Finite-window subspace oracle for the closed-ideal criterion. ---
#
# The window W(D) is spanned by b_i (|i| <= D) and c_l (1 <= l <= D); this
# is exactly the set of fixed elements whose component exponents lie in
# [-D, D].  Divisibility conditions are linear in those coordinates, so
# each condition set cuts out a subspace computed as a nullspace, and a
# finite window suffices to falsify a failed inclusion.


def window_basis(depth: int) -> list[LoopElement]:
    basis = [basis_b(i) for i in range(-depth, depth + 1)]
    basis += [basis_c(l) for l in range(1, depth + 1)]
    return basis


def _strip_t(poly: LaurentPoly) -> LaurentPoly:
    return poly.shift(-poly.valuation) if not poly.is_zero else poly


def _divisibility_rows(component_columns: list[LaurentPoly], modulus: LaurentPoly):
    """Constraint rows expressing 'modulus divides sum x_j * column_j'.

    All columns are cleared by one common power of t, keeping the condition
    linear across the window coordinates.
    """
    modulus = _strip_t(modulus)
    if modulus.degree == 0:
        return []
    clear = max(
        [0] + [-c.valuation for c in component_columns if not c.is_zero and c.valuation < 0]
    )
    remainders = [poly_mod(c.shift(clear), modulus) for c in component_columns]
    return [
        [rem.coeff(i) for rem in remainders]
        for i in range(modulus.degree)
    ]


def _constrained_subspace(rows, dimension: int):
    if not rows:
        return [[Fraction(1) if i == j else Fraction(0) for j in range(dimension)]
                for i in range(dimension)]
    return nullspace(rows)


def divisibility_subspace(basis: list[LoopElement], p_modulus: LaurentPoly,
                          r_modulus: LaurentPoly):
    """Coefficient vectors x with p_modulus | p(X) and r_modulus | r(X)."""
    rows = _divisibility_rows([b.p for b in basis], p_modulus)
    rows += _divisibility_rows([b.r for b in basis], r_modulus)
    return _constrained_subspace(rows, len(basis))


def generator_subspace(basis: list[LoopElement], modulus: LaurentPoly):
    """Coefficient vectors x with modulus dividing [X, b_0] and [X, b_1]."""
    rows = []
    for gen in (basis_b(0), basis_b(1)):
        images = [loop_bracket(b, gen) for b in basis]
        for pick in (lambda e: e.p, lambda e: e.q, lambda e: e.r):
            rows += _divisibility_rows([pick(img) for img in images], modulus)
    return _constrained_subspace(rows, len(basis))


def window_closedness_oracle(poly: LaurentPoly, tilde: LaurentPoly, depth: int):
    """Return (ideal_rows, z_rows, generator_rows) over the W(depth) coordinates.

    The brute-force closedness verdict is generator_rows == ideal_rows; the
    generator reduction itself is generator_rows == z_rows.
    """
    basis = window_basis(depth)
    ideal_rows = divisibility_subspace(basis, poly, poly)
    z_rows = divisibility_subspace(basis, tilde, poly)
    gen_rows = generator_subspace(basis, poly)
    return ideal_rows, z_rows, gen_rows


def oracle_closed(poly: LaurentPoly, tilde: LaurentPoly, depth: int) -> bool:
    ideal_rows, _, gen_rows = window_closedness_oracle(poly, tilde, depth)
    return subspace_equal(ideal_rows, gen_rows)
