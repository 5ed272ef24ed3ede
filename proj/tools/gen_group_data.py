#!/usr/bin/env python3
"""Regenerates the permutation-generator files under data/groups/.

Every group is written as 0-based image arrays together with the order the
C++ loader enforces. Each construction is closed here once as a sanity check;
the loader re-enumerates and re-checks order (and simplicity when flagged).

    python3 tools/gen_group_data.py data/groups
"""

import itertools
import json
import sys
from pathlib import Path


def closure_order(gens, limit=200000):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple(g[a[i]] for i in range(n))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > limit:
                        raise RuntimeError("closure limit exceeded")
        frontier = nxt
    return len(seen)


# --- finite fields of small order, elements encoded as ints 0..q-1 ---------

class GF:
    """GF(p^k) with elements as integers (base-p digit vectors)."""

    def __init__(self, p, k, modulus):
        # modulus: coefficients of monic polynomial, low degree first, length k+1
        self.p, self.k, self.q = p, k, p ** k
        self.mod = modulus
        self._mul = [[self._slow_mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def from_digits(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, a, b):
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def _slow_mul(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(len(prod) - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                for i in range(self.k + 1):
                    prod[deg - self.k + i] = (prod[deg - self.k + i] - c * self.mod[i]) % self.p
        return self.from_digits(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        for b in range(1, self.q):
            if self._mul[a][b] == 1:
                return b
        raise ZeroDivisionError

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def primitive(self):
        for a in range(2, self.q):
            x, order = a, 1
            while x != 1:
                x = self.mul(x, a)
                order += 1
            if order == self.q - 1:
                return a
        return 1 if self.q == 2 else None


def psl2(field):
    """PSL(2,q) on the projective line; point q is infinity."""
    q = field.q
    inf = q

    def mobius(fn):
        return [fn(z) for z in range(q)] + [fn(inf)]

    def translate(z):
        return inf if z == inf else field.add(z, 1)

    w = field.primitive()
    w2 = field.mul(w, w)

    def scale(z):
        return inf if z == inf else field.mul(w2, z)

    def flip(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return field.neg(field.inv(z))

    return [mobius(translate), mobius(scale), mobius(flip)]


def affine(field, dim, linear_gens):
    """Affine group on field^dim generated by one translation and linear maps."""
    pts = list(itertools.product(range(field.q), repeat=dim))
    index = {p: i for i, p in enumerate(pts)}

    def apply(mat, v):
        return tuple(
            sum_f(field, [field.mul(mat[r][c], v[c]) for c in range(dim)]) for r in range(dim)
        )

    gens = []
    e1 = tuple(1 if i == 0 else 0 for i in range(dim))
    gens.append([index[tuple(field.add(a, b) for a, b in zip(p, e1))] for p in pts])
    for m in linear_gens:
        gens.append([index[apply(m, p)] for p in pts])
    return gens


def sum_f(field, xs):
    acc = 0
    for x in xs:
        acc = field.add(acc, x)
    return acc


def quaternion_regular():
    # elements: (sign, unit) with unit in 1,i,j,k ; index = 4*(sign<0) + unit
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(a, b):
        sa, ua = (-1 if a >= 4 else 1), a % 4
        sb, ub = (-1 if b >= 4 else 1), b % 4
        s, u = table[(ua, ub)]
        s *= sa * sb
        return u + (4 if s < 0 else 0)

    # right multiplication by i and by j
    return [[mul(x, 1) for x in range(8)], [mul(x, 2) for x in range(8)]]


def sl2_on_vectors(field):
    pts = [v for v in itertools.product(range(field.q), repeat=2) if v != (0, 0)]
    index = {p: i for i, p in enumerate(pts)}
    mats = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    gens = []
    for m in mats:
        img = []
        for v in pts:
            w = (field.add(field.mul(m[0][0], v[0]), field.mul(m[0][1], v[1])),
                 field.add(field.mul(m[1][0], v[0]), field.mul(m[1][1], v[1])))
            img.append(index[w])
        gens.append(img)
    return gens


def suzuki8():
    """Sz(8) on the 65 points of the Tits ovoid in PG(3,8).

    Ovoid: {(1, x, y, x*y + x^(s+2) + y^s)} together with (0,0,0,1), where
    s is the field automorphism a -> a^4 (so s^2 is the Frobenius a -> a^2).
    The group is the set stabilizer of the ovoid; generators are found by
    searching for monomial and unitriangular collineations that preserve it.
    """
    f = GF(2, 3, [1, 1, 0, 1])

    def sig(a):
        return f.pow(a, 4)

    pts = [(1, x, y, sum_f(f, [f.mul(x, y), f.pow(x, 6), sig(y)])) for x in range(8) for y in range(8)]
    pts.append((0, 0, 0, 1))

    def normalize(v):
        for c in v:
            if c:
                ic = f.inv(c)
                return tuple(f.mul(ic, x) for x in v)
        raise ValueError("zero vector")

    index = {normalize(p): i for i, p in enumerate(pts)}

    def act(mat):
        img = []
        for p in pts:
            w = tuple(sum_f(f, [f.mul(p[r], mat[r][c]) for r in range(4)]) for c in range(4))
            key = normalize(w)
            if key not in index:
                return None
            img.append(index[key])
        return img

    gens = []
    # antidiagonal swap of coordinates
    anti = [[1 if r + c == 3 else 0 for c in range(4)] for r in range(4)]
    g = act(anti)
    if g is not None:
        gens.append(g)
    # diagonal torus element
    w = f.primitive()
    for a, b, c in itertools.product(range(1, 8), repeat=3):
        d = [[0] * 4 for _ in range(4)]
        d[0][0], d[1][1], d[2][2], d[3][3] = 1, a, b, c
        if (a, b, c) != (1, 1, 1):
            g = act(d)
            if g is not None and g != list(range(65)):
                gens.append(g)
                break
    # unitriangular elements fixing the point at infinity
    found = 0
    for entries in itertools.product(range(8), repeat=6):
        if entries[0] == 0:
            continue
        m = [[1, entries[0], entries[1], entries[2]],
             [0, 1, entries[3], entries[4]],
             [0, 0, 1, entries[5]],
             [0, 0, 0, 1]]
        g = act(m)
        if g is not None:
            gens.append(g)
            found += 1
            if found == 2:
                break
    return gens


def write(outdir, name, degree_gens, order, simple, note, stem=None):
    gens = degree_gens
    got = closure_order(gens)
    if got != order:
        raise SystemExit(f"{name}: closure order {got}, expected {order}")
    doc = {
        "name": name,
        "degree": len(gens[0]),
        "generators": gens,
        "expected_order": order,
        "simple": simple,
        "note": note,
    }
    stem = stem or name.lower().replace('(', '').replace(')', '').replace(',', '_')
    path = Path(outdir) / f"{stem}.json"
    path.write_text(json.dumps(doc, separators=(", ", ": ")) + "\n")
    print(f"wrote {path} (order {got}, degree {len(gens[0])})")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "data/groups"
    Path(outdir).mkdir(parents=True, exist_ok=True)

    gf3 = GF(3, 1, [0, 1])
    gf4 = GF(2, 2, [1, 1, 1])
    gf8 = GF(2, 3, [1, 1, 0, 1])
    gf9 = GF(3, 2, [1, 0, 1])
    gf2 = GF(2, 1, [0, 1])

    write(outdir, "Q8", quaternion_regular(), 8, False, "right regular representation")
    write(outdir, "SL(2,3)", sl2_on_vectors(gf3), 24, False, "action on nonzero vectors of GF(3)^2")
    write(outdir, "PSL(2,4)", psl2(gf4), 60, True, "projective line over GF(4)")
    write(outdir, "PSL(2,8)", psl2(gf8), 504, True, "projective line over GF(8)")
    write(outdir, "PSL(2,9)", psl2(gf9), 360, True, "projective line over GF(9)")

    m11 = [[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0],
           [0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7]]
    write(outdir, "M11", m11, 7920, True, "(1,...,11), (3,7,11,8)(4,10,5,6)")
    m12 = [[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11],
           [0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11],
           [11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0]]
    write(outdir, "M12", m12, 95040, True, "M11 generators and (1,12)(2,11)(3,6)(4,8)(5,9)(7,10)")

    write(outdir, "AGL(3,2)",
          affine(gf2, 3, [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]]]),
          1344, False, "affine group of GF(2)^3")
    w = gf4.primitive()
    write(outdir, "ASL(2,4)",
          affine(gf4, 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[w, 0], [0, gf4.inv(w)]]]),
          960, False, "translations of GF(4)^2 extended by SL(2,4)")

    # Soluble, not Frobenius over its hypercenter; its Engel graph has diameter 4.
    gf7 = GF(7, 1, [0, 1])
    write(outdir, "7^2:(3xDic3)",
          affine(gf7, 2, [[[6, 6], [5, 1]], [[5, 1], [1, 2]]]),
          1764, False, "translations of GF(7)^2 extended by C3 x Dic3 < GL(2,7)", stem="f49_3xdic3")

    write(outdir, "Sz(8)", suzuki8(), 29120, True, "Tits ovoid in PG(3,8)")


if __name__ == "__main__":
    main()
