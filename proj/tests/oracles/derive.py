"""Reference values frozen into the C++ tests, computed without the library.

Permutation polynomials come from enumerating every ordering, classical Tutte
polynomials from networkx, and volumes from sympy integration.
"""
from fractions import Fraction
from itertools import permutations
from collections import defaultdict

import networkx as nx
import sympy as sp


def perm_poly(a_side, b_side, edges):
    verts = list(a_side) + list(b_side)
    nbr = {v: set() for v in verts}
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    counts = defaultdict(int)
    total = 0
    for order in permutations(verts):
        rank = {v: k for k, v in enumerate(order)}
        ia = sum(1 for v in a_side if all(rank[w] < rank[v] for w in nbr[v]))
        ea = sum(1 for v in b_side if all(rank[w] < rank[v] for w in nbr[v]))
        counts[(ia, ea)] += 1
        total += 1
    return {k: Fraction(c, total) for k, c in counts.items()}


def evaluate(poly, x, y):
    return sum(c * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in poly.items())


def show(poly):
    return " ".join(f"{i},{j}:{c}" for (i, j), c in sorted(poly.items(), reverse=True))


def path(n):
    a = [v for v in range(1, n + 1) if v % 2]
    b = [v for v in range(1, n + 1) if not v % 2]
    return a, b, [(v, v + 1) for v in range(1, n)]


def complete(a, b):
    sa = list(range(1, a + 1))
    sb = list(range(a + 1, a + b + 1))
    return sa, sb, [(u, v) for u in sa for v in sb]


def habc(a, b, c):
    sa, sb, e = complete(a, b)
    for k in range(1, c + 1):
        sa.append(a + b + k)
        e.append((a + b + k, a + k))
    return sa, sb, e


def tutte(n, edges):
    g = nx.MultiGraph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(edges)
    return sp.expand(nx.tutte_polynomial(g))


if __name__ == "__main__":
    x, y = sp.symbols("x y")
    p5 = perm_poly(*path(5))
    print("P5", show(p5))
    print("P5(2,0)", evaluate(p5, 2, 0), "P5(0,2)", evaluate(p5, 0, 2), "P5(2,2)", evaluate(p5, 2, 2))
    print("P5(3,0)*P5(0,3)", evaluate(p5, 3, 0) * evaluate(p5, 0, 3))
    p4 = perm_poly(*path(4))
    print("P4", show(p4), "P4(2,0)", evaluate(p4, 2, 0))
    p3 = perm_poly(*path(3))
    print("P3(2,0)", evaluate(p3, 2, 0), "P3(0,2)", evaluate(p3, 0, 2))
    print("K22", show(perm_poly(*complete(2, 2))))
    print("K12", show(perm_poly(*complete(1, 2))))
    print("K21", show(perm_poly(*complete(2, 1))))
    print("K13(0,2)", evaluate(perm_poly(*complete(1, 3)), 0, 2))
    k22 = perm_poly(*complete(2, 2))
    print("K22(0,2)", evaluate(k22, 0, 2))
    k33 = perm_poly(*complete(3, 3))
    for t in (Fraction(1), Fraction(3, 2), Fraction(2)):
        print("K33 at", t, evaluate(k33, t, 2 - t))
    c8 = ([1, 3, 5, 7], [2, 4, 6, 8], [(v, v % 8 + 1) for v in range(1, 9)])
    c8p = perm_poly(*c8)
    for t in (Fraction(1), Fraction(3, 2), Fraction(2)):
        print("C8 at", t, evaluate(c8p, t, 2 - t))
    for spec in [(1, 1, 1), (2, 2, 1), (2, 3, 2), (3, 2, 2)]:
        p = perm_poly(*habc(*spec))
        print("H", spec, "(2,0)", evaluate(p, 2, 0), "(0,2)", evaluate(p, 0, 2), "(3,0)", evaluate(p, 3, 0))
    print("triangle", tutte(3, [(1, 2), (2, 3), (1, 3)]))
    print("C4", tutte(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))
    print("double", tutte(2, [(1, 2), (1, 2)]))
    fig = [(1, 2), (1, 3), (1, 4), (2, 5), (4, 5), (3, 6), (4, 6), (5, 6)]
    print("figure", tutte(6, fig))
    k4 = [(u, v) for u in range(1, 5) for v in range(u + 1, 5)]
    tk4 = tutte(4, k4)
    print("K4", tk4, "T(3,0)", tk4.subs({x: 3, y: 0}), "T(0,3)", tk4.subs({x: 0, y: 3}), "T(1,1)", tk4.subs({x: 1, y: 1}))
    tri = tutte(3, [(1, 2), (2, 3), (1, 3)])
    print("triangle T(2,0)", tri.subs({x: 2, y: 0}), "T(0,2)", tri.subs({x: 0, y: 2}))
    t1, t2, t3 = sp.symbols("t1 t2 t3", nonnegative=True)
    vol = sp.integrate(1, (t3, 0, sp.Min(1 - t1, 1 - t2)), (t2, 0, 1 - t1), (t1, 0, 1))
    print("alt(K3) volume", sp.nsimplify(vol))
