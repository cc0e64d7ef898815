"""Print the regular genus of every catalogue graph.

Run: python3 demos/genus_catalogue.py
"""

from gemkit import (g1_prime, g2_prime, genus_lower_bound, order_two_gem,
                    reduced_cover, regular_genus, s2xs1_standard, t3_standard,
                    torus_gem)


def row(name, gem):
    g = gem.graph
    rep = regular_genus(g)
    perm = ",".join(map(str, rep.permutation))
    print(f"{name:<14} {g.num_vertices:>5} {g.n_colors:>7}   "
          f"({perm})   {rep.genus}")
    return rep


def main():
    print(f"{'graph':<14} {'verts':>5} {'colors':>7}   best order   genus")
    row("order-2", order_two_gem(5))
    row("s2xs1", s2xs1_standard())
    row("t3", t3_standard())
    g1 = row("g1prime", g1_prime())
    g2 = row("g2prime", g2_prime())
    cov = row("cover-1", reduced_cover(1).gem)
    row("torus-cube-2", torus_gem(2))
    row("torus-cube-3", torus_gem(3))

    print()
    print("lower bound 2*chi + 5*rank - 4 vs the constructed genus:")
    for name, chi, rank, rep in (("g1prime", 0, 2, g1),
                                 ("g2prime", 0, 4, g2),
                                 ("cover-1", 1, 2, cov)):
        bound = genus_lower_bound(chi, rank)
        mark = "attained" if bound == rep.genus else "NOT attained"
        print(f"  {name:<10} bound {bound:>2}  genus {int(rep.genus):>2}  {mark}")


if __name__ == "__main__":
    main()
