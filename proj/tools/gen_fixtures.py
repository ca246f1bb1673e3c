#!/usr/bin/env python3
"""Writes the Gram-matrix fixtures under fixtures/lattices.

Root lattices are negative definite (roots of square -2) and are built from
Dynkin diagrams given as explicit edge lists; M(a,b,c) is [[2a,b],[b,2c]].
"""
import argparse
import pathlib


def dynkin(kind, n):
    if kind == "A":
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    elif kind == "E" and n == 6:
        edges = [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
    elif kind == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
    else:
        raise ValueError(kind)
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        g[a - 1][b - 1] = g[b - 1][a - 1] = 1
    return g


def scaled(g, k):
    return [[k * x for x in row] for row in g]


def write(out, name, g, comment):
    lines = [f"# {comment}", f"rank {len(g)}"]
    lines += [" ".join(str(x) for x in row) for row in g]
    (out / f"{name}.gram").write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "lattices"))
    out = pathlib.Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    for n in range(1, 20):
        write(out, f"A{n}", dynkin("A", n), f"root lattice A{n}")
    for n in range(4, 20):
        write(out, f"D{n}", dynkin("D", n), f"root lattice D{n}")
    for n in (6, 7, 8):
        write(out, f"E{n}", dynkin("E", n), f"root lattice E{n}")
    u = [[0, 1], [1, 0]]
    write(out, "U", u, "hyperbolic plane")
    write(out, "U_2", scaled(u, 2), "U(2)")
    write(out, "U_3", scaled(u, 3), "U(3)")
    write(out, "A2_2", scaled(dynkin("A", 2), 2), "A2(2)")
    write(out, "A1_3", scaled(dynkin("A", 1), 3), "A1(3)")
    write(out, "E8_neg", scaled(dynkin("E", 8), -1), "E8(-1), positive definite")
    write(out, "D4_2", scaled(dynkin("D", 4), 2), "D4(2)")
    for a, b, c in [(1, 0, 1), (1, 0, 2), (1, 0, 10), (1, 0, 19), (4, 2, 5), (5, 0, 5), (6, 0, 12),
                    (6, 6, 6), (1, 1, 1), (1, 1, 2), (3, 1, 3), (3, 3, 5), (2, 1, 3)]:
        write(out, f"M_{a}_{b}_{c}", [[2 * a, b], [b, 2 * c]], f"M({a},{b},{c})")


if __name__ == "__main__":
    main()
