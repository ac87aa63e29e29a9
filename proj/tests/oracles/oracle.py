"""Brute-force reference values for the C++ tests.

Independent of the library: regularity is decided by the order of the
monodromy group <R, T> on darts (regular iff it equals the dart count),
and skew-morphisms by filtering permutations directly.
"""
import itertools
import sys
from collections import Counter


def dn(n):
    elems = [(j, r) for r in (0, 1) for j in range(n)]

    def mul(x, y):
        (j, r), (k, s) = x, y
        return ((j + (k if r == 0 else -k)) % n, r ^ s)

    def inv(x):
        j, r = x
        return x if r else ((-j) % n, 0)

    return elems, mul, inv


def generated(gens, mul):
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        g = frontier.pop()
        for x in gens:
            h = mul(g, x)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def perm_group_order(gens, stop):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[i] for i in p)
            if q not in seen:
                seen.add(q)
                if len(seen) > stop:
                    return len(seen)
                frontier.append(q)
    return len(seen)


def is_regular(n, rot):
    elems, mul, inv = dn(n)
    k = len(rot)
    index = {g: i for i, g in enumerate(elems)}
    pos = {x: i for i, x in enumerate(rot)}
    darts = len(elems) * k
    r = [0] * darts
    t = [0] * darts
    for g in elems:
        for i, x in enumerate(rot):
            d = index[g] * k + i
            r[d] = index[g] * k + (i + 1) % k
            t[d] = index[mul(g, x)] * k + pos[inv(x)]
    return perm_group_order([tuple(r), tuple(t)], darts) == darts


def skew_kernel_size(n, rot):
    """Kernel of the vertex-stabilizer automorphism rotating the darts at 1."""
    elems, mul, inv = dn(n)
    k = len(rot)
    nxt = {x: rot[(i + 1) % k] for i, x in enumerate(rot)}
    psi = {(0, 0): (0, 0)}
    # psi respects the map: psi(g x) = psi(g) * p^c(x) with the shifts forced
    # by rotation preservation; walk breadth first recording dart shifts.
    shift = {(0, 0): 1}
    frontier = [(0, 0)]
    while frontier:
        g = frontier.pop(0)
        for i, x in enumerate(rot):
            h = mul(g, x)
            c = shift[g]
            y = rot[(i + c) % k]
            img = mul(psi[g], y)
            back = rot.index(inv(x))
            back_img = rot.index(inv(y))
            c2 = (back_img - back) % k
            if h in psi:
                if psi[h] != img or shift[h] != c2:
                    return None
            else:
                psi[h] = img
                shift[h] = c2
                frontier.append(h)
    order = 1
    cur = dict(psi)
    while any(cur[g] != g for g in elems):
        cur = {g: psi[cur[g]] for g in elems}
        order += 1

    kernel = 0
    for g in elems:
        if all(psi[mul(g, h)] == mul(psi[g], psi[h]) for h in elems):
            kernel += 1
    return kernel


def autos(n):
    elems, mul, inv = dn(n)
    out = []
    if n == 2:
        for img in itertools.permutations([(1, 0), (0, 1), (1, 1)]):
            table = {(0, 0): (0, 0), (1, 0): img[0], (0, 1): img[1], (1, 1): img[2]}
            out.append(table)
        return out
    from math import gcd
    for s in range(n):
        if gcd(s, n) != 1:
            continue
        for t in range(n):
            out.append({(j, r): ((s * j + t * r) % n, r) for (j, r) in elems})
    return out


def canonical(rot, auts):
    best = None
    for a in auts:
        img = [a[x] for x in rot]
        m = img.index(min(img))
        key = tuple(img[m:] + img[:m])
        if best is None or key < best:
            best = key
    return best


def regular_maps(n, max_valence):
    elems, mul, inv = dn(n)
    nonid = elems[1:]
    found = []
    for size in range(1, min(max_valence, len(nonid)) + 1):
        for xs in itertools.combinations(nonid, size):
            sx = set(xs)
            if any(inv(x) not in sx for x in xs):
                continue
            if len(generated(xs, mul)) != len(elems):
                continue
            first, rest = xs[0], xs[1:]
            for tail in itertools.permutations(rest):
                rot = [first, *tail]
                if is_regular(n, rot):
                    found.append(rot)
    return found


def naive_skew_count(n):
    elems, mul, inv = dn(n)
    rest = elems[1:]
    count = 0
    for img in itertools.permutations(rest):
        psi = dict(zip(rest, img))
        psi[(0, 0)] = (0, 0)
        powers = [dict((g, g) for g in elems)]
        while True:
            nxt = {g: psi[powers[-1][g]] for g in elems}
            if nxt == powers[0]:
                break
            powers.append(nxt)
        ok = True
        for g in elems:
            if not any(all(psi[mul(g, h)] == mul(psi[g], powers[(m) % len(powers)][h]) for h in elems)
                       for m in range(1, len(powers) + 1)):
                ok = False
                break
        count += ok
    return count


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    for n in (2, 3, 4):
        print(f"naive skew count D_{n}: {naive_skew_count(n)}")
    for n in range(2, limit + 1):
        maxv = 2 * n - 1 if n <= 4 else 6
        maps = regular_maps(n, maxv)
        auts = autos(n)
        classes = {}
        for rot in maps:
            classes.setdefault(canonical(rot, auts), rot)
        kernels = Counter(skew_kernel_size(n, list(rot)) for rot in classes.values())
        valences = Counter(len(rot) for rot in maps)
        print(f"n={n} valence<={maxv}: labelled regular maps {len(maps)} by valence {dict(sorted(valences.items()))}; "
              f"classes {len(classes)}; class kernel sizes {dict(sorted(kernels.items()))}")


if __name__ == "__main__":
    main()
