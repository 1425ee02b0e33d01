#!/usr/bin/env python3
"""Derive power-commutator presentations from concrete group models.

Each model supplies a multiplication, an identity and a list of elements
chosen as pc generators f_1..f_n.  The script enumerates all normal forms
f_1^e_1 ... f_n^e_n, checks they are pairwise distinct (so |G| = p^n),
and prints the power and commutator relations in the .pcp file format.

Usage: tools/derive_pcp.py <model>   (run without arguments to list models)
"""
import itertools
import sys


class Metacyclic:
    """C_{p^m} x| C_{p^k}: elements a^i b^j with b^-1 a b = a^r."""

    def __init__(self, am, bk, r):
        self.am, self.bk = am, bk
        self.rinv = pow(r, -1, am)
        self.identity = (0, 0)

    def mul(self, x, y):
        i, j = x
        k, l = y
        return ((i + k * pow(self.rinv, j, self.am)) % self.am, (j + l) % self.bk)

    a = property(lambda self: (1, 0))
    b = property(lambda self: (0, 1))


class Perm:
    """Permutations on 0..deg-1, composed left to right."""

    def __init__(self, deg):
        self.identity = tuple(range(deg))

    def mul(self, x, y):
        return tuple(y[x[i]] for i in range(len(x)))

    def cycles(self, *cs):
        img = list(self.identity)
        for c in cs:
            for s, t in zip(c, c[1:] + c[:1]):
                img[s] = t
        return tuple(img)


class Direct:
    """Elementary abelian C_p^d as exponent tuples."""

    def __init__(self, p, d):
        self.p, self.identity = p, (0,) * d

    def mul(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))


def power(G, x, k):
    r = G.identity
    for _ in range(k):
        r = G.mul(r, x)
    return r


def inverse(G, x, order_bound):
    y = x
    prev = G.identity
    for _ in range(order_bound):
        if y == G.identity:
            return prev
        prev, y = y, G.mul(y, x)
    raise ValueError("order bound exceeded")


def derive(name, p, G, gens, defs):
    n = len(gens)
    nf = {}
    for e in itertools.product(range(p), repeat=n):
        x = G.identity
        for g, k in zip(gens, e):
            x = G.mul(x, power(G, g, k))
        if x in nf:
            raise SystemExit(f"{name}: normal forms collide, not a pc sequence")
        nf[x] = e

    def word(e, above):
        if any(e[: above + 1]):
            raise SystemExit(f"{name}: weight condition fails at generator {above + 1}")
        return " ".join(f"g{k + 1}^{v}" for k, v in enumerate(e) if v) or "1"

    bound = p ** n + 1
    out = [f"name {name}", f"p    {p}", f"n    {n}"]
    for i in range(n):
        w = word(nf[power(G, gens[i], p)], i)
        if w != "1":
            out.append(f"pow  {i + 1} = {w}")
    for i in range(n):
        for j in range(i):
            x, y = gens[i], gens[j]
            c = G.mul(G.mul(inverse(G, x, bound), inverse(G, y, bound)), G.mul(x, y))
            w = word(nf[c], i)
            if w != "1":
                out.append(f"comm {i + 1} {j + 1} = {w}")
    for i, d in sorted(defs.items()):
        out.append(f"def  {i} = {d}")
    return "\n".join(out)


def metacyclic(name, p, am, bk, r, order, defs):
    G = Metacyclic(am, bk, r)
    gens = [power(G, G.b if s == "b" else G.a, k) for s, k in order]
    return derive(name, p, G, gens, defs)


MODELS = {
    # SmallGroup(3^7, 194) has f2^3 = f3 = [f2, f1], so f1 normalises the cyclic group <f2> of order 81 and acts as a -> a^4.
    # Hence G = C81 x| C27 with f1 = b, f2 = a and every pc generator is a power.
    "sg2187_194": lambda: metacyclic(
        "SmallGroup(2187,194)", 3, 81, 27, 4,
        [("b", 1), ("a", 1), ("a", 3), ("b", 3), ("a", 9), ("b", 9), ("a", 27)],
        {3: "comm 2 1", 4: "pow 1", 5: "pow 3", 6: "pow 4", 7: "pow 5"}),
    "c9": lambda: metacyclic("C9", 3, 9, 1, 1, [("a", 1), ("a", 3)], {2: "pow 1"}),
    "c3xc3": lambda: derive("C3xC3", 3, Direct(3, 2), [(1, 0), (0, 1)], {}),
    "m27": lambda: metacyclic(
        "M27 (extraspecial, exponent 9)", 3, 9, 3, 4,
        [("b", 1), ("a", 1), ("a", 3)], {3: "comm 2 1"}),
    "c27c9": lambda: metacyclic(
        "C27:C9", 3, 27, 9, 4,
        [("b", 1), ("a", 1), ("a", 3), ("b", 3), ("a", 9)],
        {3: "comm 2 1", 4: "pow 1", 5: "pow 3"}),
    "c27c3": lambda: metacyclic(
        "C27:C3", 3, 27, 3, 10,
        [("b", 1), ("a", 1), ("a", 3), ("a", 9)],
        {3: "pow 2", 4: "comm 2 1"}),
    "m125": lambda: metacyclic(
        "M125 (extraspecial, exponent 25)", 5, 25, 5, 6,
        [("b", 1), ("a", 1), ("a", 5)], {3: "comm 2 1"}),
}


def c3wrc3():
    G = Perm(9)
    base = G.cycles([0, 1, 2])
    top = G.cycles([0, 3, 6], [1, 4, 7], [2, 5, 8])
    inv = lambda x: inverse(G, x, 100)
    comm = lambda x, y: G.mul(G.mul(inv(x), inv(y)), G.mul(x, y))
    f3 = comm(base, top)
    f4 = comm(f3, top)
    return derive("C3wrC3", 3, G, [top, base, f3, f4], {3: "comm 2 1", 4: "comm 3 1"})


class UpperUnitriangular:
    """3x3 upper unitriangular matrices over F_p as (x, y, z)."""

    def __init__(self, p):
        self.p, self.identity = p, (0, 0, 0)

    def mul(self, u, v):
        p = self.p
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p)


def heisenberg():
    G = UpperUnitriangular(3)
    x, y = (1, 0, 0), (0, 1, 0)
    inv = lambda g: inverse(G, g, 100)
    c = G.mul(G.mul(inv(y), inv(x)), G.mul(y, x))
    return derive("H27 (extraspecial, exponent 3)", 3, G, [x, y, c], {3: "comm 2 1"})


MODELS["c3wrc3"] = c3wrc3
MODELS["h27"] = heisenberg

if __name__ == "__main__":
    if len(sys.argv) != 2 or sys.argv[1] not in MODELS:
        print("models:", " ".join(sorted(MODELS)))
        sys.exit(2)
    print(MODELS[sys.argv[1]]())
