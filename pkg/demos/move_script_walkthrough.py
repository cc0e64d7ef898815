"""Replay the shipped 64-to-40 vertex reduction one move at a time.

Shows the vertex count, Euler characteristic, and residue profile after
each step, then the genus of the final crystallization.

Run: python3 demos/move_script_walkthrough.py
"""

from gemkit import (parse_move_script, product_gem, regular_genus,
                    render_move_script, run_script, s2xs1_standard)
from gemkit.constructions import _data_text


def profile(gem):
    g = gem.graph
    complements = [
        g.residue_count(tuple(c for c in range(g.n_colors) if c != j))
        for j in range(g.n_colors)]
    return (f"{g.num_vertices:>3} vertices  chi={g.euler_characteristic()}  "
            f"complement residues {complements}")


def main():
    gem = product_gem(s2xs1_standard())
    steps = parse_move_script(_data_text("g1prime.moves"))
    print("start:", profile(gem))
    for step in steps:
        line = render_move_script([step]).strip()
        gem = run_script(gem, [step]).gem
        print(f"after {line}")
        print("      ", profile(gem))
    rep = regular_genus(gem.graph)
    print(f"final genus {rep.genus} at cyclic order {rep.permutation}")


if __name__ == "__main__":
    main()
