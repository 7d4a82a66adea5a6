"""Brute-force sign-twisted Schur-Weyl decomposition of V^(tensor k) and the
kernel of the lowering operator.

V is the 2-dimensional standard representation: basis x (Cartan weight +1,
Frobenius eigenvalue v) and y (weight -1, eigenvalue v^-1), with sl2 acting
through e (y -> x), f (x -> y) and h = [e, f].  On V^(tensor k) the symmetric
group acts by permuting tensor slots *times the sign of the permutation*,
and sl2 acts diagonally; the two actions commute.

Everything here is exact integer linear algebra in the standard tensor basis
(basis vectors indexed by bit masks, bit j set = letter y in slot j).  The
sl2 multiplicity of the irreducible U_m is read off as dim W_m - dim W_{m+2}
from the h-weight spaces W_m, and the symmetric-group content of each
multiplicity space is recovered by decomposing the layer-by-layer traces of
the signed permutation matrices - no eigenvalue numerics, no explicit
highest-weight vectors.

Tate twists ride along as half-integers: the lowest-weight line of U_m
carries twist +m/2 (the Weil weight of a subquotient matches its Cartan
weight, and a line of Cartan weight w has twist -w/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from vinbun.arith import Laurent
from vinbun.symrep import (
    TwoColumnDiagram,
    VirtualRep,
    cycle_types,
    decompose_class_function,
    dimension,
    hook_length_dimension,
    two_column_diagrams,
)

MAX_BRUTE_K = 8


# ---------------------------------------------------------------------------
# the standard representation and operators on tensor powers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardRep:
    """The 2-dimensional space V with its sl2 operators and Frobenius
    eigenvalues (v on the weight +1 line, v^-1 on the weight -1 line)."""

    e: np.ndarray
    f: np.ndarray
    h: np.ndarray
    frobenius: tuple


def standard_rep():
    e = np.array([[0, 1], [0, 0]], dtype=np.int64)
    f = np.array([[0, 0], [1, 0]], dtype=np.int64)
    h = e @ f - f @ e
    return StandardRep(e=e, f=f, h=h, frobenius=(Laurent.v(1), Laurent.v(-1)))


def weight_of_index(idx, k):
    """h-eigenvalue of a tensor basis vector: (#x) - (#y)."""
    ones = bin(idx).count("1")
    return k - 2 * ones


def weight_layers(k):
    """Map h-weight -> sorted list of basis indices."""
    layers = {}
    for idx in range(1 << k):
        layers.setdefault(weight_of_index(idx, k), []).append(idx)
    return layers


def permutation_matrix(k, perm, signed=True):
    """Matrix of a permutation acting on V^(tensor k): slot s of the image
    holds the letter from slot perm^{-1}(s), scaled by sign(perm) when the
    sign-twisted action is requested."""
    n = 1 << k
    inv = [0] * k
    for i, p in enumerate(perm):
        inv[p] = i
    sign = perm_sign(perm) if signed else 1
    mat = np.zeros((n, n), dtype=np.int64)
    for idx in range(n):
        out = 0
        for s in range(k):
            if (idx >> inv[s]) & 1:
                out |= 1 << s
        mat[out, idx] = sign
    return mat


def perm_sign(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_from_cycle_type(cycle_type):
    """A representative permutation with the given cycle type (0-indexed)."""
    perm = []
    start = 0
    for c in cycle_type:
        perm.extend([start + (i + 1) % c for i in range(c)])
        start += c
    return tuple(perm)


def raising_matrix(k):
    """e acting diagonally: flips one y (bit 1) to x (bit 0) per summand."""
    n = 1 << k
    mat = np.zeros((n, n), dtype=np.int64)
    for idx in range(n):
        for j in range(k):
            if (idx >> j) & 1:
                mat[idx & ~(1 << j), idx] += 1
    return mat


def lowering_matrix(k):
    """f acting diagonally: flips one x to y per summand (the monodromy
    operator on the associated graded)."""
    n = 1 << k
    mat = np.zeros((n, n), dtype=np.int64)
    for idx in range(n):
        for j in range(k):
            if not (idx >> j) & 1:
                mat[idx | (1 << j), idx] += 1
    return mat


def cartan_matrix(k):
    n = 1 << k
    return np.diag(
        np.array([weight_of_index(i, k) for i in range(n)], dtype=np.int64)
    )


# ---------------------------------------------------------------------------
# bimodule decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedBiRep:
    """Multiplicities of (S_k irreducible, sl2 highest weight) pairs inside a
    bimodule of total dimension 2^k."""

    k: int
    mults: tuple  # sorted tuple of ((partition, highest_weight), multiplicity)

    @staticmethod
    def from_dict(k, d):
        clean = {key: m for key, m in d.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError(f"negative bimodule multiplicity in {clean}")
        return GradedBiRep(k=k, mults=tuple(sorted(clean.items())))

    def as_dict(self):
        return dict(self.mults)

    def total_dimension(self):
        return sum(
            m * hook_length_dimension(lam) * (weight + 1)
            for (lam, weight), m in self.mults
        )

    def describe(self):
        bits = []
        for (lam, weight), m in sorted(self.mults, key=lambda t: -t[0][1]):
            term = f"U_{weight} (x) S{lam}"
            bits.append(term if m == 1 else f"{m} * {term}")
        return "  +  ".join(bits) if bits else "0"


def brute_force_schur_weyl(k):
    """Decompose V^(tensor k) under the commuting (sign-twisted S_k, sl2)
    actions by explicit integer matrices.

    Returns the exact bimodule multiplicities, computed from h-weight space
    dimensions (U_m multiplicity = dim W_m - dim W_{m+2}) and from the
    S_k-character of each weight layer.
    """
    if not 1 <= k <= MAX_BRUTE_K:
        raise ValueError(f"k = {k} out of range (1..{MAX_BRUTE_K})")
    layers = weight_layers(k)
    layer_traces = {}  # cycle type -> {weight: trace of signed permutation}
    for c in cycle_types(k):
        mat = permutation_matrix(k, perm_from_cycle_type(c), signed=True)
        diag = np.diagonal(mat)
        layer_traces[c] = {
            w: int(sum(diag[i] for i in idxs)) for w, idxs in layers.items()
        }
    out = {}
    for m in range(k % 2, k + 1, 2):
        # class function of the multiplicity space of U_m
        values = {}
        for c in cycle_types(k):
            tr = layer_traces[c].get(m, 0) - layer_traces[c].get(m + 2, 0)
            values[c] = tr
        rep = decompose_class_function(values, k)
        for lam, mult in rep.mults.items():
            if mult < 0:
                raise AssertionError(f"negative multiplicity for {lam} in U_{m}")
            if mult:
                out[(lam, m)] = mult
    result = GradedBiRep.from_dict(k, out)
    if result.total_dimension() != 1 << k:
        raise AssertionError("bimodule dimensions do not add up to 2^k")
    return result


def predicted_schur_weyl(k):
    """The closed-form decomposition: sum over 0 <= r <= k/2 of
    U_{k-2r} tensor (two-column irreducible with columns k-r, r)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return GradedBiRep.from_dict(
        k,
        {
            (TwoColumnDiagram(k, r).partition, k - 2 * r): 1
            for r in range(k // 2 + 1)
        },
    )


# ---------------------------------------------------------------------------
# kernel of the monodromy operator
# ---------------------------------------------------------------------------


def kernel_of_n(k):
    """The kernel of the monodromy (lowering) operator on the k-th oscillator
    bimodule: one copy of each two-column irreducible, the (k-r, r) diagram
    carrying Tate twist k/2 - r (the twist of the lowest weight line of
    U_{k-2r})."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return tuple(
        (TwoColumnDiagram(k, r), Fraction(k, 2) - r) for r in range(k // 2 + 1)
    )


def lowering_kernel_reps(k):
    """Literal matrix kernel of f on V^(tensor k), decomposed under S_k layer
    by layer: maps each highest weight m = k - 2r to the S_k content of
    ker(f) intersected with the h-weight -m space."""
    if not 1 <= k <= MAX_BRUTE_K:
        raise ValueError(f"k = {k} out of range (1..{MAX_BRUTE_K})")
    layers = weight_layers(k)
    f_mat = lowering_matrix(k)
    out = {}
    for r in range(k // 2 + 1):
        m = k - 2 * r
        w = -m
        cols = layers[w]
        rows = layers.get(w - 2, [])
        if rows:
            sub = sympy.Matrix([[int(f_mat[i, j]) for j in cols] for i in rows])
            kernel_vecs = sub.nullspace()
        else:
            kernel_vecs = [
                sympy.Matrix([1 if t == s else 0 for t in range(len(cols))])
                for s in range(len(cols))
            ]
        if not kernel_vecs:
            out[m] = VirtualRep(k, {})
            continue
        basis = sympy.Matrix.hstack(*kernel_vecs)
        gram_inv = (basis.T * basis).inv()
        values = {}
        for c in cycle_types(k):
            perm_mat = permutation_matrix(k, perm_from_cycle_type(c), signed=True)
            sub_perm = sympy.Matrix(
                [[int(perm_mat[i, j]) for j in cols] for i in cols]
            )
            # matrix of the permutation in the kernel basis (the kernel is
            # S_k-stable because the actions commute)
            action = gram_inv * basis.T * (sub_perm * basis)
            tr = action.trace()
            if tr != int(tr):
                raise AssertionError("non-integral trace on kernel subspace")
            values[c] = int(tr)
        out[m] = decompose_class_function(values, k)
    return out


def sign_on_lowest_lines(twisted=True):
    """How the transposition acts on the lowest weight lines M_0 of U_0 and
    M_2 of U_2 inside V tensor V.  The sign-twisted action gives
    {0: +1, 2: -1}; the plain permutation action flips both signs."""
    k = 2
    layers = weight_layers(k)
    f_mat = lowering_matrix(k)
    swap = permutation_matrix(k, (1, 0), signed=twisted)
    out = {}
    for m, w in ((0, 0), (2, -2)):
        cols = layers[w]
        rows = layers.get(w - 2, [])
        if rows:
            sub = sympy.Matrix([[int(f_mat[i, j]) for j in cols] for i in rows])
            vecs = sub.nullspace()
        else:
            vecs = [sympy.Matrix([1 if t == s else 0 for t in range(len(cols))])
                    for s in range(len(cols))]
        assert len(vecs) == 1
        u = vecs[0]
        sub_swap = sympy.Matrix([[int(swap[i, j]) for j in cols] for i in cols])
        image = sub_swap * u
        # the line is swap-stable, so image = lambda * u
        lam = None
        for a, b in zip(image, u):
            if b != 0:
                lam = sympy.Rational(a, b)
                break
        assert lam is not None and image == lam * u
        out[m] = int(lam)
    return out


def schur_weyl_dimension_identity(k):
    """sum over r of (k - 2r + 1) * dim rho_{(k-r,r)} == 2^k."""
    total = sum(
        (k - 2 * r + 1) * dimension(TwoColumnDiagram(k, r))
        for r in range(k // 2 + 1)
    )
    return total == 1 << k


def operators_commute(k):
    """All commutators of the S_k generators with e, f, h vanish on
    V^(tensor k) (checked on adjacent transpositions, which generate)."""
    e, f, h = raising_matrix(k), lowering_matrix(k), cartan_matrix(k)
    for i in range(k - 1):
        perm = list(range(k))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        p = permutation_matrix(k, tuple(perm), signed=True)
        for op in (e, f, h):
            if not np.array_equal(p @ op, op @ p):
                return False
    return True
