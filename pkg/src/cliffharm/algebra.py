"""Complexified Clifford algebras Cl(0,2) and Cl(0,3) over fixed blade bases.

Generators square to -1 and anticommute; the scalar imaginary i commutes
with every blade.  Coefficients live in numpy complex arrays whose last
axis runs over the blade basis in the fixed documented order:

    4-dim table: [1, e1, e2, e12]
    8-dim table: [1, e1, e2, e3, e12, e13, e23, e123]

Three named value algebras share these two tables: "Cl2" and "H" use the
4-dim table (for "H" the bivector slot is read as the third quaternion
imaginary, paired with a 3-dimensional spatial domain), "Cl3" the 8-dim
table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

_MASKS = {
    2: (0b00, 0b01, 0b10, 0b11),
    3: (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111),
}
_NAMES = {
    2: ("1", "e1", "e2", "e12"),
    3: ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"),
}


def _blade_sign(a: int, b: int) -> int:
    """Sign of the product of basis blades with index masks a, b."""
    swaps = 0
    j = 0
    bb = b
    while bb:
        if bb & 1:
            swaps += bin(a >> (j + 1)).count("1")
        bb >>= 1
        j += 1
    swaps += bin(a & b).count("1")  # each repeated generator contributes -1
    return -1 if swaps % 2 else 1


@dataclass(frozen=True)
class Algebra:
    """One blade table plus its precomputed structure tensor."""

    name: str
    gens: int
    masks: tuple = field(repr=False, default=())
    names: tuple = field(repr=False, default=())
    tensor: np.ndarray = field(repr=False, default=None)
    grades: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return 2 ** self.gens


def _build(name: str, gens: int) -> Algebra:
    masks = _MASKS[gens]
    dim = len(masks)
    index = {m: k for k, m in enumerate(masks)}
    T = np.zeros((dim, dim, dim))
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            T[i, j, index[mi ^ mj]] = _blade_sign(mi, mj)
    grades = np.array([bin(m).count("1") for m in masks])
    return Algebra(name, gens, masks, _NAMES[gens], T, grades)


ALGEBRAS = {
    "Cl2": _build("Cl2", 2),
    "Cl3": _build("Cl3", 3),
    "H": _build("H", 2),
}

# Spatial dimension each value algebra is paired with.
SPATIAL_DIM = {"Cl2": 2, "Cl3": 3, "H": 3}
# Value algebras admissible for a given spatial dimension, keyed by table size.
VALUE_ALGEBRA_BY_DIM = {(3, 4): "H", (3, 8): "Cl3", (2, 4): "Cl2"}


def get_algebra(name: str) -> Algebra:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise KeyError(f"unknown value algebra {name!r}; choose from {sorted(ALGEBRAS)}")


def geometric_product(a: np.ndarray, b: np.ndarray, algebra: Algebra | str) -> np.ndarray:
    """Geometric product of coefficient arrays; last axis is the blade axis."""
    alg = get_algebra(algebra) if isinstance(algebra, str) else algebra
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return np.einsum("ijk,...i,...j->...k", alg.tensor, a, b)


def clifford_conjugate(a: np.ndarray, algebra: Algebra | str) -> np.ndarray:
    """Clifford conjugation: grade k picks up (-1)^(k(k+1)/2)."""
    alg = get_algebra(algebra) if isinstance(algebra, str) else algebra
    signs = np.where((alg.grades * (alg.grades + 1) // 2) % 2 == 1, -1.0, 1.0)
    return np.asarray(a, dtype=complex) * signs


def coeff_inner(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hermitian inner product making the blade basis orthonormal."""
    return np.sum(np.conj(a) * b, axis=-1)


def coeff_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=complex).ravel()))


def vector_embed(x, algebra: Algebra | str, spatial_n: int | None = None) -> np.ndarray:
    """Embed a real/complex spatial vector into coefficient slots 1..n."""
    alg = get_algebra(algebra) if isinstance(algebra, str) else algebra
    x = np.asarray(x)
    n = x.shape[-1] if spatial_n is None else spatial_n
    if n >= alg.dim:
        raise ValueError(f"vector length {n} does not fit algebra {alg.name}")
    out = np.zeros(x.shape[:-1] + (alg.dim,), dtype=complex)
    out[..., 1 : n + 1] = x
    return out


def vector_part(a: np.ndarray, spatial_n: int) -> np.ndarray:
    return np.asarray(a)[..., 1 : spatial_n + 1]


def paravector_inverse(x: np.ndarray, algebra: Algebra | str) -> np.ndarray:
    """Kelvin-type inversion of a pure vector: x -> x/|x|^2.

    The product of the input with the result is -1 (vectors square to
    -|x|^2).  Input must be a pure grade-1 vector; the zero vector is
    singular.
    """
    alg = get_algebra(algebra) if isinstance(algebra, str) else algebra
    x = np.asarray(x, dtype=complex)
    nonvec = x.copy()
    nonvec[..., 1 : alg.gens + 1] = 0
    total = coeff_norm(x)
    if coeff_norm(nonvec) > 1e-12 * max(total, 1.0):
        raise ValueError("paravector_inverse requires a pure grade-1 vector")
    mag2 = np.sum(np.abs(x) ** 2, axis=-1, keepdims=True)
    if np.any(mag2 == 0):
        raise ZeroDivisionError("paravector_inverse is singular at the zero vector")
    return x / mag2


class IdealId(Enum):
    S2plus = "S2plus"
    S2minus = "S2minus"
    S2plusE1 = "S2plusE1"
    S2minusE1 = "S2minusE1"
    W2plus = "W2plus"
    W2minus = "W2minus"
    W2plusE1 = "W2plusE1"
    W2minusE1 = "W2minusE1"
    W2plusE3 = "W2plusE3"
    W2minusE3 = "W2minusE3"
    W2plusE1E3 = "W2plusE1E3"
    W2minusE1E3 = "W2minusE1E3"
    U2plus = "U2plus"
    U2minus = "U2minus"
    U2plusE1 = "U2plusE1"
    U2minusE1 = "U2minusE1"


_i = 1j

# Generating spinors, one line each, as literal coefficient vectors.
_GEN = {
    IdealId.S2plus: ("H", [1, 0, 0, -_i]),            # 1 - i e1e2
    IdealId.S2minus: ("H", [0, 1, _i, 0]),            # e1 + i e2
    IdealId.S2plusE1: ("H", [0, 1, -_i, 0]),          # (1 - i e1e2) e1
    IdealId.S2minusE1: ("H", [-1, 0, 0, -_i]),        # (e1 + i e2) e1
    IdealId.W2plus: ("Cl3", [1, 0, 0, -_i, -_i, 0, 0, -1]),
    IdealId.W2minus: ("Cl3", [0, 1, _i, 0, 0, -_i, 1, 0]),
    IdealId.W2plusE1: ("Cl3", [0, 1, -_i, 0, 0, _i, 1, 0]),
    IdealId.W2minusE1: ("Cl3", [1, 0, 0, _i, _i, 0, 0, -1]),
    IdealId.W2plusE3: ("Cl3", [_i, 0, 0, 1, 1, 0, 0, -_i]),
    IdealId.W2minusE3: ("Cl3", [0, _i, -1, 0, 0, 1, _i, 0]),
    IdealId.W2plusE1E3: ("Cl3", [0, -_i, -1, 0, 0, 1, -_i, 0]),
    IdealId.W2minusE1E3: ("Cl3", [_i, 0, 0, -1, -1, 0, 0, -_i]),
    IdealId.U2plus: ("Cl2", [1, 1, _i, -_i]),         # e1 + i e2 + 1 - i e1e2
    IdealId.U2minus: ("Cl2", [-1, 1, _i, _i]),        # e1 + i e2 - (1 - i e1e2)
    IdealId.U2plusE1: ("Cl2", [-1, 1, -_i, -_i]),
    IdealId.U2minusE1: ("Cl2", [-1, -1, _i, -_i]),
}

IDEAL_AMBIENT = {k: v[0] for k, v in _GEN.items()}

# Two-dimensional ambient left ideals, given as orthonormal column pairs.
_PAIR_VECS = {
    ("H", 1): ([1, 0, 0, -_i], [0, 1, _i, 0]),
    ("H", 2): ([0, 1, -_i, 0], [1, 0, 0, _i]),
    ("Cl2", 1): ([1, 0, 0, -_i], [0, 1, _i, 0]),
    ("Cl2", 2): ([0, 1, -_i, 0], [1, 0, 0, _i]),
    ("Cl3", 1): ([1, 0, 0, -_i, -_i, 0, 0, -1], [0, 1, _i, 0, 0, -_i, 1, 0]),
    ("Cl3", 2): ([0, 1, -_i, 0, 0, _i, 1, 0], [1, 0, 0, _i, _i, 0, 0, -1]),
    ("Cl3", 3): ([1, 0, 0, _i, -_i, 0, 0, 1], [0, 1, _i, 0, 0, _i, -1, 0]),
    ("Cl3", 4): ([0, 1, -_i, 0, 0, -_i, -1, 0], [1, 0, 0, -_i, _i, 0, 0, 1]),
}

IDEAL_PAIR = {
    IdealId.S2plus: ("H", 1),
    IdealId.S2minus: ("H", 1),
    IdealId.S2plusE1: ("H", 2),
    IdealId.S2minusE1: ("H", 2),
    IdealId.W2plus: ("Cl3", 1),
    IdealId.W2minus: ("Cl3", 1),
    IdealId.W2plusE3: ("Cl3", 1),
    IdealId.W2minusE3: ("Cl3", 1),
    IdealId.W2plusE1: ("Cl3", 2),
    IdealId.W2minusE1: ("Cl3", 2),
    IdealId.W2plusE1E3: ("Cl3", 2),
    IdealId.W2minusE1E3: ("Cl3", 2),
    IdealId.U2plus: ("Cl2", 1),
    IdealId.U2minus: ("Cl2", 1),
    IdealId.U2plusE1: ("Cl2", 2),
    IdealId.U2minusE1: ("Cl2", 2),
}

# Reference axis (by value algebra) used for recorded left eigenvalues:
# the last spatial direction, i.e. blade slot 3 for "H"/"Cl3", slot 2 for "Cl2".
REFERENCE_AXIS_SLOT = {"H": 3, "Cl3": 3, "Cl2": 2}

# Measured left-multiplication eigenvalue of the reference axis on each
# generator line.  Recorded from direct blade arithmetic; two of the U lines
# come out opposite to a printed claim upstream, and the recorded value wins.
IDEAL_AXIS_EIGENVALUE = {
    IdealId.S2plus: _i,
    IdealId.S2minus: -_i,
    IdealId.S2plusE1: _i,
    IdealId.S2minusE1: -_i,
    IdealId.W2plus: _i,
    IdealId.W2minus: -_i,
    IdealId.W2plusE1: _i,
    IdealId.W2minusE1: -_i,
    IdealId.W2plusE3: _i,
    IdealId.W2minusE3: -_i,
    IdealId.W2plusE1E3: _i,
    IdealId.W2minusE1E3: -_i,
    IdealId.U2plus: -_i,
    IdealId.U2minus: _i,
    IdealId.U2plusE1: -_i,
    IdealId.U2minusE1: _i,
}


def ideal_generators(id: IdealId) -> list:
    """Generating spinors of the named ideal line, as coefficient vectors."""
    if not isinstance(id, IdealId):
        raise KeyError(f"not an IdealId: {id!r}")
    ambient, coeffs = _GEN[id]
    return [np.array(coeffs, dtype=complex)]


def pair_basis(algebra_name: str, pair_index: int) -> np.ndarray:
    """Orthonormal (dim, 2) basis of the ambient two-dimensional left ideal."""
    cols = _PAIR_VECS[(algebra_name, pair_index)]
    B = np.array(cols, dtype=complex).T
    return B / np.linalg.norm(B, axis=0)


def pair_projector(algebra_name: str, pair_index: int) -> np.ndarray:
    B = pair_basis(algebra_name, pair_index)
    return B @ B.conj().T


def ideal_project(v: np.ndarray, id: IdealId) -> np.ndarray:
    """Orthogonal projection onto the generator line of the ideal."""
    g = ideal_generators(id)[0]
    v = np.asarray(v, dtype=complex)
    if v.shape[-1] != g.shape[0]:
        raise ValueError(f"value dimension {v.shape[-1]} does not match {id.value}")
    coef = coeff_inner(g, v) / coeff_inner(g, g)
    return coef[..., None] * g


# Quaternion view adapter: even part of the 8-dim table -> 4-dim table.
# 1 -> 1, e23 -> e1', e13 -> -e2', e12 -> e3'.
def phi_even_to_h(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    odd = coeff_norm(a[..., [1, 2, 3, 7]])
    if odd > 1e-10 * max(coeff_norm(a), 1.0):
        raise ValueError("quaternion view needs an even-grade element")
    out = np.zeros(a.shape[:-1] + (4,), dtype=complex)
    out[..., 0] = a[..., 0]
    out[..., 1] = a[..., 6]
    out[..., 2] = -a[..., 5]
    out[..., 3] = a[..., 4]
    return out


def serialize_multivector(coeffs: np.ndarray) -> str:
    """Text form `dim;index:re,im;...`, nonzero entries in ascending order."""
    coeffs = np.asarray(coeffs, dtype=complex)
    parts = [str(coeffs.shape[-1])]
    for k, c in enumerate(coeffs):
        if c != 0:
            parts.append(f"{k}:{float(c.real)!r},{float(c.imag)!r}")
    return ";".join(parts)


def parse_multivector(text: str) -> np.ndarray:
    fields = [p for p in text.strip().split(";") if p]
    if not fields:
        raise ValueError("empty multivector text")
    dim = int(fields[0])
    if dim not in (4, 8):
        raise ValueError(f"unsupported blade count {dim}")
    out = np.zeros(dim, dtype=complex)
    for part in fields[1:]:
        idx, _, reim = part.partition(":")
        re, _, im = reim.partition(",")
        k = int(idx)
        if not 0 <= k < dim:
            raise ValueError(f"blade index {k} out of range for dim {dim}")
        out[k] = float(re) + 1j * float(im or 0.0)
    return out
