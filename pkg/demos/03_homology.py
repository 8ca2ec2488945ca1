"""Z2-homology of graph orbifolds: dimensions, bases, and meridian classes
across the dihedral case table."""

from pa.orbigraph import h1_z2, make_dihedral, make_exterior
from pa.slopes import slope


def report(label, graph):
    rep = h1_z2(graph)
    classes = {k: v for k, v in sorted(rep.meridian_class.items())}
    print(f"{label}: dim {rep.dimension}, basis {rep.basis}")
    print(f"   meridian classes: {classes}")


def main():
    print("== the case table over O(q/p; d+, d-) ==")
    # knot (p odd), d+ = 1, d- odd: dimension 1, both arcs carry the generator
    report("O(2/5;1,3)", make_dihedral(slope("2/5"), 1, 3).graph)
    # 2-component link (p even), d+ = 1, d- odd: dimension 2, tunnel dies
    report("O(3/8;1,5)", make_dihedral(slope("3/8"), 1, 5).graph)
    # exactly one tunnel weight even: dimension 2
    report("O(2/5;2,3)", make_dihedral(slope("2/5"), 2, 3).graph)

    print("\n== link exteriors ==")
    report("E(2/5)", make_exterior(slope("2/5")).graph)
    report("E(3/8)", make_exterior(slope("3/8")).graph)

    print("\n== odd-weight edges never carry homology ==")
    rep = h1_z2(make_dihedral(slope("2/5"), 2, 3).graph)
    zero = tuple(0 for _ in range(rep.dimension))
    print(f"   class of tminus (weight 3): {rep.meridian_class['tminus']} == {zero}")


if __name__ == "__main__":
    main()
