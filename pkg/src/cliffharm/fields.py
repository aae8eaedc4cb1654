"""Clifford-valued fields on centered periodic grids and their transforms.

Grid points are x_k = -L/2 + k L/N per axis; frequencies xi_k = (k - N/2)/L.
The forward transform uses the kernel exp(-i 2 pi <x, xi>) scaled by the
cell volume (L/N)^n, so values approximate the continuum integral; the
inverse carries the per-bin weight (1/L)^n.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from .spin import GroupElement, inverse as group_inverse, rotation_matrix

MAGIC = b"CLF1"


@dataclass(frozen=True)
class GridSpec:
    n: int
    N: int
    L: float

    def __post_init__(self):
        if self.n not in (2, 3):
            raise ValueError("spatial dimension must be 2 or 3")
        if self.N < 8 or self.N & (self.N - 1):
            raise ValueError("points per axis must be a power of two, at least 8")
        if self.L <= 0:
            raise ValueError("box length must be positive")

    @property
    def h(self) -> float:
        return self.L / self.N

    @property
    def shape(self) -> tuple:
        return (self.N,) * self.n

    def axis(self) -> np.ndarray:
        return -self.L / 2 + self.h * np.arange(self.N)

    def freq_axis(self) -> np.ndarray:
        return (np.arange(self.N) - self.N / 2) / self.L

    def coords(self) -> list:
        return np.meshgrid(*([self.axis()] * self.n), indexing="ij")

    def freqs(self) -> list:
        return np.meshgrid(*([self.freq_axis()] * self.n), indexing="ij")

    def freq_magnitude(self) -> np.ndarray:
        XI = self.freqs()
        return np.sqrt(sum(x * x for x in XI))


class _FieldBase:
    def __init__(self, spec: GridSpec, value_algebra: str, data: np.ndarray, meta: dict | None = None):
        a = alg.get_algebra(value_algebra)
        if alg.SPATIAL_DIM[value_algebra] != spec.n:
            raise ValueError(f"value algebra {value_algebra} pairs with n={alg.SPATIAL_DIM[value_algebra]}")
        data = np.asarray(data, dtype=complex)
        if data.shape != spec.shape + (a.dim,):
            raise ValueError(f"data shape {data.shape} does not match grid {spec.shape}+({a.dim},)")
        self.spec = spec
        self.value_algebra = value_algebra
        self.data = data
        self.meta = dict(meta or {})

    @property
    def algebra(self) -> alg.Algebra:
        return alg.get_algebra(self.value_algebra)

    def copy(self):
        return type(self)(self.spec, self.value_algebra, self.data.copy(), dict(self.meta))

    def _like(self, data, meta=None):
        return type(self)(self.spec, self.value_algebra, data, self.meta if meta is None else meta)


class CliffordField(_FieldBase):
    """Spatial samples of a Clifford-valued function."""


class SpectralField(_FieldBase):
    """Frequency-side coefficients under the fixed transform convention."""


def field_from_values(spec, value_algebra, data, meta=None) -> CliffordField:
    return CliffordField(spec, value_algebra, data, meta)


def zero_field(spec, value_algebra) -> CliffordField:
    a = alg.get_algebra(value_algebra)
    return CliffordField(spec, value_algebra, np.zeros(spec.shape + (a.dim,), dtype=complex))


def spectral_forward(f: CliffordField) -> SpectralField:
    spec = f.spec
    axes = tuple(range(spec.n))
    shifted = np.fft.ifftshift(f.data, axes=axes)
    out = np.fft.fftshift(np.fft.fftn(shifted, axes=axes), axes=axes)
    out *= (spec.L / spec.N) ** spec.n
    return SpectralField(spec, f.value_algebra, out, f.meta)


def spectral_inverse(F: SpectralField) -> CliffordField:
    spec = F.spec
    axes = tuple(range(spec.n))
    shifted = np.fft.ifftshift(F.data, axes=axes)
    out = np.fft.fftshift(np.fft.ifftn(shifted, axes=axes), axes=axes)
    out *= (spec.N / spec.L) ** spec.n
    return CliffordField(spec, F.value_algebra, out, F.meta)


def inner_product(f, g) -> complex:
    """Blade-orthonormal Hermitian pairing, conjugate-linear in the first slot."""
    if type(f) is not type(g) or f.spec != g.spec:
        raise ValueError("inner product needs two fields of the same kind and grid")
    if isinstance(f, SpectralField):
        w = (1.0 / f.spec.L) ** f.spec.n
    else:
        w = f.spec.h ** f.spec.n
    return complex(w * np.sum(np.conj(f.data) * g.data))


def norm(f) -> float:
    return float(np.sqrt(max(inner_product(f, f).real, 0.0)))


def rel_error(a, b) -> float:
    """|a - b| / |b| over whole fields, with a 0/0 guard."""
    d = float(np.linalg.norm(a.data - b.data))
    r = float(np.linalg.norm(b.data))
    return d / r if r > 0 else d


def pointwise_multiply_left(m, F: SpectralField) -> SpectralField:
    """Left geometric product by m(xi) at every frequency bin; m maps a
    frequency vector to a coefficient vector of the field's algebra."""
    spec = F.spec
    a = F.algebra
    XI = spec.freqs()
    M = np.zeros(spec.shape + (a.dim,), dtype=complex)
    it = np.ndindex(*spec.shape)
    for idx in it:
        xi = np.array([x[idx] for x in XI])
        M[idx] = np.asarray(m(xi), dtype=complex)
    out = np.einsum("ijk,...i,...j->...k", a.tensor, M, F.data)
    return SpectralField(spec, F.value_algebra, out, F.meta)


def apply_multiplier_array(M: np.ndarray, F: SpectralField) -> SpectralField:
    """Fast path for precomputed multiplier coefficient arrays."""
    a = F.algebra
    out = np.einsum("ijk,...i,...j->...k", a.tensor, M, F.data)
    return SpectralField(F.spec, F.value_algebra, out, F.meta)


def left_multiply_constant(c: np.ndarray, f):
    a = f.algebra
    out = np.einsum("ijk,i,...j->...k", a.tensor, np.asarray(c, dtype=complex), f.data)
    return f._like(out)


def right_multiply_constant(f, c: np.ndarray):
    a = f.algebra
    out = np.einsum("ijk,...i,j->...k", a.tensor, f.data, np.asarray(c, dtype=complex))
    return f._like(out)


def make_band_limited_random(spec: GridSpec, value_algebra: str, bandfraction: float, seed) -> CliffordField:
    """Deterministic random field with spectrum in |xi| <= bandfraction * xi_max,
    zero mean, and empty Nyquist planes."""
    if not 0 < bandfraction <= 1:
        raise ValueError("bandfraction must lie in (0, 1]")
    a = alg.get_algebra(value_algebra)
    rng = np.random.default_rng(seed)
    data = rng.standard_normal(spec.shape + (a.dim,)) + 1j * rng.standard_normal(spec.shape + (a.dim,))
    ximax = spec.N / (2 * spec.L)
    mask = spec.freq_magnitude() <= bandfraction * ximax
    mag = spec.freq_magnitude()
    mask &= mag > 0  # zero mean
    for ax in range(spec.n):
        sl = [slice(None)] * spec.n
        sl[ax] = 0
        mask[tuple(sl)] = False  # Nyquist plane has no mirror partner
    data *= mask[..., None]
    F = SpectralField(spec, value_algebra, data, {"band_limit": bandfraction * ximax, "zero_mean": True})
    return spectral_inverse(F)


def _signed_permutation(A: np.ndarray, tol: float = 1e-12) -> bool:
    R = np.round(A)
    if np.max(np.abs(A - R)) > tol:
        return False
    P = np.abs(R)
    return bool(np.all(P.sum(axis=0) == 1) and np.all(P.sum(axis=1) == 1))


def is_grid_preserving(g: GroupElement, spec: GridSpec) -> bool:
    if abs(g.r - 1.0) > 1e-12:
        return False
    if not _signed_permutation(rotation_matrix(g.s)):
        return False
    steps = g.b / spec.h
    return bool(np.max(np.abs(steps - np.round(steps))) <= 1e-9)


def resample_action(g: GroupElement, f: CliffordField) -> CliffordField:
    """Samples of x -> f(g^{-1} x).

    Grid-preserving g (r=1, axis quarter-turn spin, on-grid shift) permutes
    the samples exactly.  Otherwise the field is evaluated by summing its
    occupied frequency modes at the transformed points, which is exact for
    band-limited data; non-band-limited input gets an approximation flag.
    """
    spec = f.spec
    if g.n != spec.n:
        raise ValueError("group element dimension does not match the grid")
    ginv = group_inverse(g)
    A_inv = rotation_matrix(ginv.s)

    if is_grid_preserving(g, spec):
        K = np.indices(spec.shape)
        out_idx = []
        for a_ in range(spec.n):
            y_a = sum(ginv.r * A_inv[a_, b_] * (-spec.L / 2 + spec.h * K[b_]) for b_ in range(spec.n))
            y_a = y_a + ginv.b[a_]
            j = np.round((y_a + spec.L / 2) / spec.h).astype(int) % spec.N
            out_idx.append(j)
        data = f.data[tuple(out_idx)]
        return CliffordField(spec, f.value_algebra, data, f.meta)

    F = spectral_forward(f)
    mags = np.max(np.abs(F.data), axis=-1)
    peak = float(mags.max())
    occ = np.nonzero(mags > 1e-13 * peak) if peak > 0 else tuple([np.array([], int)] * spec.n)
    XI = spec.freqs()
    xi_occ = np.stack([x[occ] for x in XI], axis=-1)
    c_occ = F.data[occ]
    K = np.indices(spec.shape)
    pts = np.stack([(-spec.L / 2 + spec.h * K[a_]).ravel() for a_ in range(spec.n)], axis=-1)
    xprime = (ginv.r * (pts @ A_inv.T)) + ginv.b
    out = np.zeros((pts.shape[0], f.algebra.dim), dtype=complex)
    chunk = 4096
    for lo in range(0, pts.shape[0], chunk):
        hi = min(lo + chunk, pts.shape[0])
        phases = np.exp(2j * np.pi * (xprime[lo:hi] @ xi_occ.T))
        out[lo:hi] = phases @ c_occ
    out *= (1.0 / spec.L) ** spec.n
    meta = dict(f.meta)
    if f.meta.get("band_limit") is None:
        meta["approximation_mode"] = True
    return CliffordField(spec, f.value_algebra, out.reshape(spec.shape + (f.algebra.dim,)), meta)


def shift_cells(f: CliffordField, steps) -> CliffordField:
    """Exact periodic shift by whole cells, one step count per axis."""
    data = np.roll(f.data, shift=tuple(int(s) for s in steps), axis=tuple(range(f.spec.n)))
    return CliffordField(f.spec, f.value_algebra, data, f.meta)


def spectral_upsample(f: CliffordField, factor: int) -> CliffordField:
    """Trigonometric interpolation onto a factor-times finer grid."""
    if factor == 1:
        return f.copy()
    spec = f.spec
    fine = GridSpec(spec.n, spec.N * factor, spec.L)
    F = spectral_forward(f)
    a = f.algebra
    big = np.zeros(fine.shape + (a.dim,), dtype=complex)
    off = (fine.N - spec.N) // 2
    sl = tuple(slice(off, off + spec.N) for _ in range(spec.n))
    big[sl] = F.data
    return spectral_inverse(SpectralField(fine, f.value_algebra, big, F.meta))


def write_field_binary(f, path) -> None:
    spec = f.spec
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(struct.pack("<IId", spec.n, spec.N, spec.L))
        flat = f.data.reshape(-1, f.algebra.dim)
        inter = np.empty(flat.shape + (2,), dtype="<f8")
        inter[..., 0] = flat.real
        inter[..., 1] = flat.imag
        fh.write(inter.tobytes())


def read_field_binary(path) -> CliffordField:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise ValueError(f"bad magic {magic!r}; expected {MAGIC!r}")
        n, N, L = struct.unpack("<IId", fh.read(16))
        body = fh.read()
    spec = GridSpec(int(n), int(N), float(L))
    npts = spec.N ** spec.n
    if len(body) % (16 * npts):
        raise ValueError("field payload length does not divide the grid size")
    M = len(body) // (16 * npts)
    try:
        value_algebra = alg.VALUE_ALGEBRA_BY_DIM[(spec.n, M)]
    except KeyError:
        raise ValueError(f"no value algebra with {M} blades for n={spec.n}")
    raw = np.frombuffer(body, dtype="<f8").reshape(npts, M, 2)
    data = (raw[..., 0] + 1j * raw[..., 1]).reshape(spec.shape + (M,))
    return CliffordField(spec, value_algebra, data)


def write_field_json(f, path) -> None:
    spec = f.spec
    flat = f.data.reshape(-1, f.algebra.dim)
    doc = {
        "format": "CLF1",
        "n": spec.n,
        "N": spec.N,
        "L": spec.L,
        "value_algebra": f.value_algebra,
        "values": [[[v.real, v.imag] for v in row] for row in flat],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)


def read_field_json(path) -> CliffordField:
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != "CLF1":
        raise ValueError("not a CLF1 json document")
    spec = GridSpec(int(doc["n"]), int(doc["N"]), float(doc["L"]))
    value_algebra = doc["value_algebra"]
    a = alg.get_algebra(value_algebra)
    flat = np.array([[complex(re, im) for re, im in row] for row in doc["values"]])
    return CliffordField(spec, value_algebra, flat.reshape(spec.shape + (a.dim,)))


def write_field(f, path) -> None:
    if str(path).endswith(".json"):
        write_field_json(f, path)
    else:
        write_field_binary(f, path)


def read_field(path) -> CliffordField:
    if str(path).endswith(".json"):
        return read_field_json(path)
    return read_field_binary(path)
