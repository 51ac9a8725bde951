#!/usr/bin/env python3
"""Regenerate data/fixtures/*.json (finite group models G with normal G°)."""

import json
import pathlib
import sys


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def table_of(elems, mul):
    index = {e: i for i, e in enumerate(elems)}
    return [[index[mul(a, b)] for b in elems] for a in elems], index


def perm_mul(p, q):
    # (p q)(i) = p(q(i)), functions compose right to left
    return tuple(p[i] for i in q)


def quat_mul(x, y):
    # quaternion (a, b, c, d) = a + b i + c j + d k with integer entries
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def semidirect(phi):
    def mul(x, y):
        (a, b, e), (c, d, f) = x, y
        c2, d2 = phi(c, d) if e else (c, d)
        return ((a + c2) % 3, (b + d2) % 3, (e + f) % 2)
    return mul


def section_for(table, normal):
    """Smallest id of each coset, cosets ordered by that id."""
    n = len(table)
    inv = [next(b for b in range(n) if table[a][b] == 0) for a in range(n)]
    reps, covered = [], set()
    for x in range(n):
        if x in covered:
            continue
        reps.append(x)
        covered.update(table[x][h] for h in normal)
    assert reps[0] == 0 and all(table[inv[r]][r] == 0 for r in reps)
    return reps


def fixture(name, elems, mul, normal_pred, field, description, irr_dims):
    table, index = table_of(elems, mul)
    normal = sorted(index[e] for e in elems if normal_pred(e))
    return {
        "name": name,
        "description": description,
        "order": len(elems),
        "group": {"table": table},
        "normal_subgroup": normal,
        "section": section_for(table, normal),
        "field": field,
        "expected_irr_dims": irr_dims,
    }


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fixtures = []

    ident3 = (0, 1, 2)
    s3 = closure([(1, 2, 0), (1, 0, 2)], perm_mul, ident3)
    def even(p):
        return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2 == 0
    fixtures.append(fixture("S3_A3", s3, perm_mul, even, "GF(7)",
                            "S3 with normal subgroup A3 over F7", [1, 1, 2]))

    ident4 = (0, 1, 2, 3)
    r, s = (1, 2, 3, 0), (0, 3, 2, 1)
    d4 = closure([r, s], perm_mul, ident4)
    fixtures.append(fixture("D4_center", d4, perm_mul, lambda p: p in (ident4, (2, 3, 0, 1)), "GF(7)",
                            "dihedral group of order 8 with normal subgroup its center over F7",
                            [1, 1, 1, 1, 2]))

    one = (1, 0, 0, 0)
    q8 = closure([(0, 1, 0, 0), (0, 0, 1, 0)], quat_mul, one)
    fixtures.append(fixture("Q8_Z4", q8, quat_mul, lambda q: q[2] == 0 and q[3] == 0, "GF(17)",
                            "quaternion group with normal subgroup <i> over F17", [1, 1, 1, 1, 2]))

    z4 = closure([1], lambda a, b: (a + b) % 4, 0)
    fixtures.append(fixture("Z4_Z2", z4, lambda a, b: (a + b) % 4, lambda a: a % 2 == 0, "GF(5)",
                            "cyclic group of order 4 with normal subgroup of order 2 over F5", [1, 1, 1, 1]))

    inv_mul = semidirect(lambda c, d: (-c % 3, -d % 3))
    g18 = closure([(1, 0, 0), (0, 1, 0), (0, 0, 1)], inv_mul, (0, 0, 0))
    fixtures.append(fixture("Z3xZ3_Z2_inversion", g18, inv_mul, lambda x: x[2] == 0, "GF(7)",
                            "(Z/3 x Z/3) x| Z/2 with Z/2 acting by inversion, normal subgroup Z/3 x Z/3, over F7",
                            [1, 1, 2, 2, 2, 2]))

    swap_mul = semidirect(lambda c, d: (d, c))
    g18s = closure([(1, 0, 0), (0, 1, 0), (0, 0, 1)], swap_mul, (0, 0, 0))
    fixtures.append(fixture("Z3xZ3_Z2_swap", g18s, swap_mul, lambda x: x[2] == 0, "GF(7)",
                            "(Z/3 x Z/3) x| Z/2 with Z/2 swapping the factors, normal subgroup Z/3 x Z/3, over F7",
                            [1, 1, 1, 1, 1, 1, 2, 2, 2]))

    for f in fixtures:
        path = out / (f["name"] + ".json")
        rows = ",\n".join("   " + json.dumps(r) for r in f["group"]["table"])
        f = dict(f, group={"table": "@TABLE@"})
        text = json.dumps(f, indent=1).replace('"@TABLE@"', "[\n" + rows + "\n  ]")
        path.write_text(text + "\n")
        print(path)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures")
