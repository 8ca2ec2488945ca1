"""Rigid-cusp translation lattices and triangle-group word arithmetic: the
squared-length spectra, the short-translation filter, and image orders under
the natural epimorphisms between spherical triangle groups."""

from pa.cosetenum import (
    image_order,
    spherical_triangle_order,
    triangle_group,
    triangle_word_images,
)
from pa.cusplattice import brenner_candidates, spectrum, word_for_vector


def main():
    print("== squared-length spectra of the two rigid cusp lattices ==")
    for kind in ["T244", "T236"]:
        print(f"  {kind}:")
        for value, orbits in spectrum(kind, 3):
            for orbit in orbits:
                print(f"    L^2={value}: rep {orbit.representative} "
                      f"(orbit size {len(orbit.members)}), word {orbit.word}")

    print("\n== the short-translation filter ==")
    for kind in ["T244", "T236"]:
        keep = [o.coef2 for o in brenner_candidates(kind)]
        print(f"  {kind}: candidate squared lengths {keep}")

    print("\n== words for arbitrary lattice vectors ==")
    for m, n in [(1, 0), (2, 1)]:
        print(f"  T244 ({m},{n}) = {word_for_vector('T244', m, n)}")

    print("\n== spherical triangle groups ==")
    for t in [(2, 2, 2), (2, 3, 3), (2, 3, 4), (2, 3, 5)]:
        G = triangle_group(*t)
        print(f"  |T{t}| = {len(G)} (closed form {spherical_triangle_order(*t)})")

    print("\n== candidate-word images in the spherical quotients ==")
    for target in [(2, 2, 2), (2, 2, 4), (2, 4, 2)]:
        k = image_order("b2ac2a", (2, 4, 4), target)
        print(f"  |b2ac2a| = {k} in T{target}")

    G, (g, h) = triangle_word_images((2, 3, 3), ["ac4ac2", "a"])
    print(f"  ac4ac2 conjugate to a in T(2,3,3)?  {G.are_conjugate(g, h)}")


if __name__ == "__main__":
    main()
