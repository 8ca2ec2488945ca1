"""Walk through 2-bridge slope arithmetic: classification, equivalence,
continued fractions, and the parity substitution q -> q-hat."""

from pa.slopes import (
    canonical,
    components,
    continued_fraction,
    equivalence,
    hat,
    is_hyperbolic,
    slope,
)


def main():
    print("== classifying some 2-bridge links ==")
    for text in ["1/3", "3/8", "7/10", "4/5", "1/4"]:
        r = slope(text)
        print(
            f"K({r}): {components(r)} component(s), "
            f"hyperbolic={is_hyperbolic(r)}, canonical form {canonical(r)}"
        )

    # the infinite slope names the trivial 2-component link; it has no
    # finite continued fraction and the hyperbolicity test rejects it
    inf = slope("inf")
    print(f"\nK({inf}): {components(inf)} components (the trivial link)")

    print("\n== equivalence of slopes over the same denominator ==")
    a, b = slope("2/7"), slope("4/7")
    v = equivalence(a, b)
    print(f"K({a}) ~ K({b})?  preserving={v.preserving} "
          f"reversing={v.reversing} bridge_swap={v.bridge_swap}")

    print("\n== continued fractions and the hat substitution ==")
    for text in ["3/8", "2/5", "5/6"]:
        r = slope(text)
        print(f"{r} = {continued_fraction(r)}   hat({r}) = {hat(r)}")


if __name__ == "__main__":
    main()
