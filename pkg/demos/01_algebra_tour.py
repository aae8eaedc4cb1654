"""Tour of the value algebras: blade products, ideals, and the quaternion view.

Run:  python3 demos/01_algebra_tour.py
"""

import numpy as np

from cliffharm import algebra as alg


def show(label, coeffs, names):
    terms = []
    for c, nm in zip(np.round(np.asarray(coeffs), 12), names):
        if c != 0:
            terms.append(f"({c:+.3g}){nm}")
    print(f"  {label} = " + (" ".join(terms) if terms else "0"))


def main():
    for name in ("Cl2", "Cl3"):
        a = alg.get_algebra(name)
        print(f"{name}: dimension {a.dim}, blades {list(a.names)}")
        e1 = np.eye(a.dim)[1]
        e2 = np.eye(a.dim)[2]
        show("e1 e1", alg.geometric_product(e1, e1, a), a.names)
        show("e1 e2", alg.geometric_product(e1, e2, a), a.names)
        show("e2 e1", alg.geometric_product(e2, e1, a), a.names)
        print()

    print("primitive idempotents (p p = p):")
    for name, p in [
        ("H", np.array([0.5, 0, 0, -0.5j])),
        ("Cl3", np.array([0.25, 0, 0, -0.25j, -0.25j, 0, 0, -0.25])),
        ("Cl2", np.array([0.5, 0.5, 0.5j, -0.5j])),
    ]:
        gap = np.max(np.abs(alg.geometric_product(p, p, name) - p))
        print(f"  {name}: residual {gap:.1e}")
    print()

    print("left products stay inside each generator's two-dim pair span:")
    rng = np.random.default_rng(0)
    worst = {}
    for id in alg.IdealId:
        ambient, pair = alg.IDEAL_PAIR[id]
        a = alg.get_algebra(ambient)
        P = alg.pair_projector(ambient, pair)
        g = alg.ideal_generators(id)[0]
        x = rng.standard_normal(a.dim) + 1j * rng.standard_normal(a.dim)
        y = alg.geometric_product(x, g, a)
        worst[id.value] = float(np.linalg.norm(y - P @ y) / np.linalg.norm(y))
    print(f"  worst leak over all {len(worst)} generators: {max(worst.values()):.1e}")
    print()

    print("the even 8-dim subalgebra read as the 4-dim table is a homomorphism:")
    rng = np.random.default_rng(1)
    a3 = alg.get_algebra("Cl3")
    even = np.zeros(8, dtype=complex)
    even[[0, 4, 5, 6]] = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    other = np.zeros(8, dtype=complex)
    other[[0, 4, 5, 6]] = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    lhs = alg.phi_even_to_h(alg.geometric_product(even, other, a3))
    rhs = alg.geometric_product(alg.phi_even_to_h(even), alg.phi_even_to_h(other), "H")
    print(f"  phi(xy) vs phi(x)phi(y): {np.max(np.abs(lhs - rhs)):.1e}")


if __name__ == "__main__":
    main()
