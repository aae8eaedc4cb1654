import numpy as np
import pytest

from cliffharm import algebra as alg
from cliffharm import fields as fl
from cliffharm import transforms as tr


def _random_directions(rng, n, count):
    xi = rng.standard_normal((count, n))
    keep = np.linalg.norm(xi, axis=1) > 1e-6
    return xi[keep]


@pytest.mark.parametrize("value_algebra,n", [("Cl2", 2), ("H", 3), ("Cl3", 3)])
def test_symbol_identities_on_random_frequencies(value_algebra, n):
    a = alg.get_algebra(value_algebra)
    rng = np.random.default_rng(10 + n + a.dim)
    xi = _random_directions(rng, n, 10_000)
    m = np.zeros((xi.shape[0], a.dim), dtype=complex)
    unit = xi / np.linalg.norm(xi, axis=1, keepdims=True)
    for j in range(n):
        m[:, j + 1] = 1j * unit[:, j]
    one = np.zeros(a.dim)
    one[0] = 1.0
    chip = 0.5 * (one + m)
    chim = 0.5 * (one - m)
    mm = alg.geometric_product(m, m, a)
    assert np.max(np.abs(mm - one)) < 1e-13
    assert np.max(np.abs(alg.geometric_product(chip, chip, a) - chip)) < 1e-13
    assert np.max(np.abs(alg.geometric_product(chim, chim, a) - chim)) < 1e-13
    assert np.max(np.abs(alg.geometric_product(chip, chim, a))) < 1e-13
    assert np.max(np.abs(chip + chim - one)) < 1e-14


def test_pointwise_symbol_matches_array():
    spec = fl.GridSpec(2, 16, 8.0)
    M = tr.hilbert_multiplier_array(spec, "Cl2")
    XI = spec.freqs()
    i, j = 11, 4
    want = tr.hilbert_multiplier_at(np.array([XI[0][i, j], XI[1][i, j]]), "Cl2")
    assert np.allclose(M[i, j], want, atol=1e-15)
    center = (spec.N // 2, spec.N // 2)
    assert np.all(M[center] == 0)
    with pytest.raises(ZeroDivisionError):
        tr.hilbert_multiplier_at(np.zeros(3))


def test_chi_arrays_halve_the_origin():
    spec = fl.GridSpec(3, 8, 8.0)
    P = tr.chi_multiplier_array(spec, "Cl3", +1)
    center = (4, 4, 4)
    want = np.zeros(8)
    want[0] = 0.5
    assert np.allclose(P[center], want)


@pytest.mark.parametrize("n,N,L,value_algebra", [(2, 32, 12.0, "Cl2"), (3, 16, 10.0, "Cl3"), (3, 16, 10.0, "H")])
def test_hilbert_squares_to_identity(n, N, L, value_algebra):
    spec = fl.GridSpec(n, N, L)
    for seed in range(3):
        f = fl.make_band_limited_random(spec, value_algebra, 0.4, seed)
        assert fl.rel_error(tr.hilbert(tr.hilbert(f)), f) < 1e-12


@pytest.mark.parametrize("n,N,L,value_algebra", [(2, 32, 12.0, "Cl2"), (3, 16, 10.0, "Cl3")])
def test_hilbert_routes_agree(n, N, L, value_algebra):
    spec = fl.GridSpec(n, N, L)
    f = fl.make_band_limited_random(spec, value_algebra, 0.4, 20)
    assert fl.rel_error(tr.hilbert(f, "multiplier"), tr.hilbert(f, "riesz_sum")) < 1e-13
    with pytest.raises(ValueError):
        tr.hilbert(f, "fastest")


def test_axis_sine_maps_to_vector_cosine():
    spec = fl.GridSpec(2, 32, 8.0)
    X = spec.coords()
    a = 2 / spec.L
    f = fl.zero_field(spec, "Cl2")
    f.data[..., 0] = np.sin(2 * np.pi * a * X[0])
    H = tr.hilbert(f)
    want = fl.zero_field(spec, "Cl2")
    want.data[..., 1] = np.cos(2 * np.pi * a * X[0])
    assert fl.rel_error(H, want) < 1e-12


def test_hilbert_commutes_with_cell_shifts():
    spec = fl.GridSpec(2, 32, 12.0)
    f = fl.make_band_limited_random(spec, "Cl2", 0.4, 21)
    lhs = tr.hilbert(fl.shift_cells(f, (3, -5)))
    rhs = fl.shift_cells(tr.hilbert(f), (3, -5))
    assert fl.rel_error(lhs, rhs) < 1e-13


def test_constant_fields_are_annihilated():
    spec = fl.GridSpec(2, 16, 8.0)
    ones = fl.zero_field(spec, "Cl2")
    ones.data[..., 0] = 1.0
    assert fl.norm(tr.hilbert(ones)) < 1e-13
    # the mean passes through each Hardy projection at half weight
    half = tr.hardy_project("+", ones)
    assert np.allclose(half.data[..., 0], 0.5, atol=1e-13)


def test_riesz_components_square_to_minus_identity():
    spec = fl.GridSpec(3, 16, 10.0)
    f = fl.make_band_limited_random(spec, "Cl3", 0.4, 22)
    acc = fl.zero_field(spec, "Cl3")
    for j in range(3):
        acc.data = acc.data + tr.riesz(j, tr.riesz(j, f)).data
    minus = fl.field_from_values(spec, "Cl3", -f.data)
    assert fl.rel_error(acc, minus) < 1e-12
    with pytest.raises(ValueError):
        tr.riesz(3, f)


@pytest.mark.parametrize("value_algebra,n,N,L", [("Cl2", 2, 32, 12.0), ("H", 3, 16, 10.0), ("Cl3", 3, 16, 10.0)])
def test_hardy_projections_split_and_are_eigenspaces(value_algebra, n, N, L):
    spec = fl.GridSpec(n, N, L)
    f = fl.make_band_limited_random(spec, value_algebra, 0.4, 23)
    plus = tr.hardy_project("+", f)
    minus = tr.hardy_project(-1, f)
    recon = fl.field_from_values(spec, value_algebra, plus.data + minus.data)
    assert fl.rel_error(recon, f) < 1e-13
    assert fl.rel_error(tr.hardy_project("+", plus), plus) < 1e-12
    assert fl.rel_error(tr.hilbert(plus), plus) < 1e-12
    Hm = tr.hilbert(minus)
    neg = fl.field_from_values(spec, value_algebra, -minus.data)
    assert fl.rel_error(Hm, neg) < 1e-12


def test_hardy_projection_of_a_plane_wave():
    spec = fl.GridSpec(2, 16, 8.0)
    X = spec.coords()
    k = 3  # positive frequency along the first axis
    f = fl.zero_field(spec, "Cl2")
    f.data[..., 0] = np.exp(2j * np.pi * (k / spec.L) * X[0])
    plus = tr.hardy_project("+", f)
    # chi_+ at that frequency is (1 + i e1)/2
    want = fl.zero_field(spec, "Cl2")
    want.data[..., 0] = 0.5 * f.data[..., 0]
    want.data[..., 1] = 0.5j * f.data[..., 0]
    assert fl.rel_error(plus, want) < 1e-13


def test_poisson_damps_each_mode_by_its_frequency():
    spec = fl.GridSpec(2, 16, 8.0)
    X = spec.coords()
    k1, k2 = 3, -2
    f = fl.zero_field(spec, "Cl2")
    f.data[..., 0] = np.exp(2j * np.pi * ((k1 / spec.L) * X[0] + (k2 / spec.L) * X[1]))
    x0 = 0.35
    ext = tr.poisson_extend(f, x0)
    ximag = np.hypot(k1 / spec.L, k2 / spec.L)
    want = np.exp(-2 * np.pi * x0 * ximag)
    assert np.max(np.abs(ext.data[..., 0] - want * f.data[..., 0])) < 1e-12
    with pytest.raises(ValueError):
        tr.poisson_extend(f, 0.0)


def test_pv_quadrature_reproduces_the_multiplier_route():
    # punctured-kernel summation with Richardson refinement against the
    # spectral symbol; tolerance pinned from a measured 1.1e-5
    spec = fl.GridSpec(2, 64, 12.0)
    X = spec.coords()
    f = fl.zero_field(spec, "Cl2")
    f.data[..., 0] = np.exp(-np.pi * (X[0] ** 2 + X[1] ** 2))
    f.meta["band_limit"] = spec.N / (2 * spec.L)
    q = tr.pv_quadrature_riesz(0, f)
    assert fl.rel_error(q, tr.riesz(0, f)) < 1e-4
    with pytest.raises(ValueError):
        tr.pv_quadrature_riesz(0, f, levels=4)


def test_cauchy_extension_matches_damped_projection():
    # boundary integral against the exact spectral route chi_+ o Poisson;
    # tolerance pinned from a measured 1.1e-5
    spec = fl.GridSpec(2, 32, 12.0)
    X = spec.coords()
    f = fl.zero_field(spec, "Cl2")
    f.data[..., 0] = np.exp(-np.pi * (X[0] ** 2 + X[1] ** 2) / 16.0)
    f.meta["band_limit"] = spec.N / (2 * spec.L)
    C = tr.cauchy_extend(f, 0.4, upsample=8)
    target = tr.hardy_project("+", tr.poisson_extend(f, 0.4))
    diff = fl.field_from_values(spec, "Cl2", C.data - target.data)
    assert fl.norm(diff) / fl.norm(f) < 5e-4
    with pytest.raises(ValueError):
        tr.cauchy_extend(f, -0.1)
