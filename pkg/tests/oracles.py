"""Plain-Python reference implementations used to cross-check the library.

Nothing here imports the checkers; only raw tables are read.
"""
import itertools
import math


def tables(cat):
    return (set(int(i) for i, e in enumerate(cat.exist) if e), cat.dom.tolist(), cat.cod.tolist(),
            cat.comp.tolist(), cat.size)


def _keq(E, a, b):
    return not (a in E or b in E) or a == b


def _eid(E, a, b):
    return a == b and a in E and b in E


def axiom_fails_at(tabs, name, w):
    E, dom, cod, comp, n = tabs
    if name == "S1":
        (x,) = w
        return dom[x] in E and x not in E
    if name == "S2":
        (y,) = w
        return cod[y] in E and y not in E
    if name == "S3":
        x, y = w
        return (comp[x][y] in E) != _eid(E, dom[x], cod[y])
    if name == "S4":
        x, y, z = w
        return not _keq(E, comp[x][comp[y][z]], comp[comp[x][y]][z])
    if name == "S5":
        (x,) = w
        return not _keq(E, comp[x][dom[x]], x)
    if name == "S6":
        (y,) = w
        return not _keq(E, comp[cod[y]][y], y)
    if name == "NE":
        return len(E) == n
    raise KeyError(name)


def first_failures(tabs):
    """Lexicographically first witness per axiom, by naive enumeration."""
    n = tabs[4]
    arity = {"S1": 1, "S2": 1, "S3": 2, "S4": 3, "S5": 1, "S6": 1}
    out = {}
    for name, k in arity.items():
        for w in itertools.product(range(n), repeat=k):
            if axiom_fails_at(tabs, name, w):
                out[name] = w
                break
    if axiom_fails_at(tabs, "NE", ()):
        out["NE"] = ()
    return out


def count_functions(m, n):
    return n ** m


def injections(m, n):
    return math.perm(n, m) if m <= n else 0


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def residual_divisor(a, b, n):
    """Largest divisor x of n with gcd(x, a) | b."""
    cands = [x for x in divisors(n) if b % math.gcd(x, a) == 0]
    best = [x for x in cands if all(x % y == 0 for y in cands)]
    return best[0]


def heyting_residual(elements, leq, meet, a, c):
    cands = [b for b in elements if leq(meet(a, b), c)]
    return [b for b in cands if all(leq(x, b) for x in cands)][0]
