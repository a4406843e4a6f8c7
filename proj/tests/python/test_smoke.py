"""Smoke test for the python bindings and the CLI round trip."""

import os
import subprocess
import sys
import tempfile

import _planrecolor as pr


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    g = pr.grid(3, 4)
    check(g.num_vertices() == 12, "grid size")
    check(g.triangle_free(), "grid is triangle-free")

    a = pr.random_coloring(g, 7, 1)
    b = pr.random_coloring(g, 7, 2)
    check(g.is_proper(a) and g.is_proper(b), "random colorings proper")

    plan = pr.recolor_planar(g, a, b, 7, "triangle-free")
    check(plan["total_length"] <= plan["budget"] == 7 * 12, "budget")
    check(pr.apply_steps(g, a, plan["steps"]) == b, "plan replays to target")

    t = pr.stacked_triangulation(20, 5)
    x = pr.random_coloring(t, 10, 3)
    y = pr.random_coloring(t, 10, 4)
    plan = pr.recolor_planar(t, x, y, 10, "general")
    check(plan["total_length"] <= 8 * 20, "general budget")
    check(pr.apply_steps(t, x, plan["steps"]) == y, "general plan replays")

    steps, final = pr.eliminate_color(t, x, 10, [1] * 20, "general")
    check(all(c != 1 for c in final), "color 1 eliminated")
    check(pr.apply_steps(t, x, steps) == final, "elimination replays")

    c5 = pr.cycle(5)
    check(pr.oracle_distance(c5, 4, [1, 2, 1, 2, 3], [2, 1, 2, 1, 3]) > 0, "oracle distance")
    check(pr.oracle_diameter(c5, 4) >= 5, "oracle diameter")

    g2 = pr.PlaneGraph.parse(g.serialize())
    check(g2.serialize() == g.serialize(), "serialize round trip")

    cli = os.environ.get("PLANRECOLOR_CLI")
    if cli:
        with tempfile.TemporaryDirectory() as d:
            gp = os.path.join(d, "g.graph")
            ap = os.path.join(d, "a.col")
            bp = os.path.join(d, "b.col")
            pp = os.path.join(d, "out.plan")
            with open(gp, "w") as f:
                f.write(g.serialize())
            with open(ap, "w") as f:
                f.write("".join(f"{v}: {c}\n" for v, c in enumerate(a)))
            with open(bp, "w") as f:
                f.write("".join(f"{v}: {c}\n" for v, c in enumerate(b)))
            r = subprocess.run(
                [cli, "solve", gp, ap, bp, "--mode", "triangle-free", "--k", "7",
                 "-o", pp],
                capture_output=True, text=True)
            check(r.returncode == 0, f"cli solve: {r.stdout} {r.stderr}")
            check("verdict=pass" in r.stdout, "cli verdict")
            r = subprocess.run([cli, "verify", gp, ap, pp], capture_output=True, text=True)
            check(r.returncode == 0, f"cli verify: {r.stdout} {r.stderr}")
            check("verdict=pass" in r.stdout, "cli verify verdict")

    print("smoke ok")


if __name__ == "__main__":
    main()
