"""Universal constructions decided by exhaustive search.

Every search walks candidates in ascending index order and returns the
first witness that passes, so reports are reproducible. Uniqueness is
always meant up to existing identity.
"""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, ResourceError
from .report import StructureReport


@dataclass(frozen=True)
class ProductWitness:
    object: int
    proj1: int
    proj2: int
    polarity: str = "product"


@dataclass(frozen=True)
class ExponentialWitness:
    expo: int
    eval: int
    product: ProductWitness


@dataclass(frozen=True)
class Diagram:
    nodes: tuple
    edges: tuple = ()  # (u, i, j): u is an arrow from node i to node j


@dataclass(frozen=True)
class Cone:
    apex: int
    legs: tuple


@dataclass(frozen=True)
class SubobjectClassifierWitness:
    omega: int
    truth: int
    terminal: int


def _identity(cat, a, what="argument"):
    if not (isinstance(a, (int, np.integer)) and 0 <= a < cat.size and cat.is_identity(int(a))):
        raise InputError(f"{what} {a!r} is not an identity")
    return int(a)


def _existing(cat, f, what="arrow"):
    if not (isinstance(f, (int, np.integer)) and 0 <= f < cat.size and cat.E(int(f))):
        raise InputError(f"{what} {f!r} does not exist")
    return int(f)


def _typed(cat, f, a, b):
    return cat.E(f) and cat.dom[f] == a and cat.cod[f] == b


def _factor_counts(produced, expected):
    """Count how often each expected code is produced (both int arrays)."""
    if produced.size == 0:
        return np.zeros(expected.shape[0], dtype=np.int64)
    values, counts = np.unique(produced, return_counts=True)
    pos = np.searchsorted(values, expected)
    pos = np.clip(pos, 0, values.size - 1)
    return np.where(values[pos] == expected, counts[pos], 0)


def _report_counts(report, prefix, counts, witnesses):
    """Add first existence/uniqueness failure given per-expected counts."""
    missing = np.flatnonzero(counts == 0)
    if missing.size:
        report.add(f"{prefix}.existence", witnesses(int(missing[0])), "no mediating arrow")
        report.count(f"{prefix}.existence_failures", int(missing.size))
    extra = np.flatnonzero(counts > 1)
    if extra.size:
        report.add(f"{prefix}.uniqueness", witnesses(int(extra[0])), "mediating arrow not unique")
        report.count(f"{prefix}.uniqueness_failures", int(extra.size))


# ------------------------------------------------------------ terminal

def find_terminal(cat, polarity="terminal"):
    if polarity not in ("terminal", "initial"):
        raise InputError("polarity must be 'terminal' or 'initial'")
    ids = cat.identity_list
    candidates = []
    for T in ids:
        if polarity == "terminal":
            ok = all(cat.hom(A, T).size == 1 for A in ids)
        else:
            ok = all(cat.hom(T, A).size == 1 for A in ids)
        if ok:
            candidates.append(T)
    report = StructureReport(info={"candidates": candidates})
    report.stats["searched"] = len(ids)
    if not candidates:
        report.add(f"{polarity}.none", (), f"no {polarity} object")
    return (candidates[0] if candidates else None), report.finalize()


# ------------------------------------------------------------ products

def check_product(cat, w, a, b):
    a = _identity(cat, a)
    b = _identity(cat, b)
    P = _identity(cat, w.object, "product object")
    p1 = _existing(cat, w.proj1, "proj1")
    p2 = _existing(cat, w.proj2, "proj2")
    n = cat.size
    report = StructureReport()
    if w.polarity == "product":
        if not (_typed(cat, p1, P, a) and _typed(cat, p2, P, b)):
            raise InputError("projections must be arrows P -> a and P -> b")
    elif w.polarity == "coproduct":
        if not (_typed(cat, p1, a, P) and _typed(cat, p2, b, P)):
            raise InputError("injections must be arrows a -> P and b -> P")
    else:
        raise InputError("polarity must be 'product' or 'coproduct'")
    checked = 0
    for X in cat.identity_list:
        if w.polarity == "product":
            H, A, B = cat.hom(X, P), cat.hom(X, a), cat.hom(X, b)
            produced = cat.comp[p1, H] * n + cat.comp[p2, H]
        else:
            H, A, B = cat.hom(P, X), cat.hom(a, X), cat.hom(b, X)
            produced = cat.comp[H, p1] * n + cat.comp[H, p2]
        expected = (A[:, None] * n + B[None, :]).ravel()
        checked += expected.size
        counts = _factor_counts(produced, expected)
        _report_counts(report, "universal", counts,
                       lambda k: (X, int(expected[k] // n), int(expected[k] % n)))
        if not report.verdict:
            break
    report.stats["pairs_checked"] = checked
    return report.finalize()


def find_product(cat, a, b, polarity="product"):
    """First passing witness for a×b (or a+b), or None; second value counts candidates."""
    ids = cat.identity_list
    tried = 0
    for P in ids:
        if polarity == "product":
            sizes_ok = all(cat.hom(X, P).size == cat.hom(X, a).size * cat.hom(X, b).size for X in ids)
        else:
            sizes_ok = all(cat.hom(P, X).size == cat.hom(a, X).size * cat.hom(b, X).size for X in ids)
        if not sizes_ok:
            continue
        if polarity == "product":
            firsts, seconds = cat.hom(P, a), cat.hom(P, b)
        else:
            firsts, seconds = cat.hom(a, P), cat.hom(b, P)
        for p1 in firsts:
            for p2 in seconds:
                tried += 1
                w = ProductWitness(P, int(p1), int(p2), polarity)
                if check_product(cat, w, a, b).verdict:
                    return w, tried
    return None, tried


def find_binary_products(cat, polarity="product"):
    ids = cat.identity_list
    table = {}
    report = StructureReport()
    failing = []
    tried = 0
    for a, b in itertools.product(ids, repeat=2):
        w, t = find_product(cat, a, b, polarity)
        tried += t
        table[(a, b)] = w
        if w is None:
            failing.append((a, b))
    if failing:
        report.add(f"binary_{polarity}s.missing", failing[0], f"no {polarity} for this pair")
    report.info["failing_pairs"] = failing
    report.stats.update({"pairs": len(table), "candidates": tried})
    return report.finalize(), table


# ------------------------------------------------------------ equalizers

def check_equalizer(cat, e, f, g):
    f = _existing(cat, f, "f")
    g = _existing(cat, g, "g")
    if cat.dom[f] != cat.dom[g] or cat.cod[f] != cat.cod[g]:
        raise InputError("equalizer: f and g are not parallel")
    e = _existing(cat, e, "e")
    A = int(cat.dom[f])
    n = cat.size
    report = StructureReport()
    if cat.cod[e] != A:
        report.add("equalizer.typing", (e,), "cod e is not dom f")
        return report.finalize()
    fe, ge = cat.c(f, e), cat.c(g, e)
    if not (fe == ge and cat.E(fe)):
        report.add("equalizer.commute", (e, f, g), "f·e ≄ g·e")
    Eo = int(cat.dom[e])
    for X in cat.identity_list:
        H = cat.hom(X, A)
        fh, gh = cat.comp[f, H], cat.comp[g, H]
        need = H[(fh == gh) & cat.exist[fh]]
        K = cat.hom(X, Eo)
        counts = _factor_counts(cat.comp[e, K], need)
        _report_counts(report, "universal", counts, lambda k: (X, int(need[k])))
    del n
    return report.finalize()


# --------------------------------------------------------- mono / epi

def classify_mono_epi(cat, f):
    f = _existing(cat, f, "f")
    after = np.flatnonzero(cat.exist & cat.exist[cat.comp[f, :]])      # g with f·g existing
    fg = cat.comp[f, after]
    before = np.flatnonzero(cat.exist & cat.exist[cat.comp[:, f]])    # g with g·f existing
    gf = cat.comp[before, f]
    return {"mono": bool(np.unique(fg).size == fg.size),
            "epi": bool(np.unique(gf).size == gf.size)}


def monomorphisms(cat):
    return [int(f) for f in np.flatnonzero(cat.exist) if classify_mono_epi(cat, int(f))["mono"]]


# ------------------------------------------------------------ pullbacks

def _pullback_universal(cat, p0, p1, f, g, report):
    n = cat.size
    P, X, Y = int(cat.dom[p0]), int(cat.dom[f]), int(cat.dom[g])
    for Q in cat.identity_list:
        Q0, Q1 = cat.hom(Q, X), cat.hom(Q, Y)
        fq = cat.comp[f, Q0]
        gq = cat.comp[g, Q1]
        ok = (fq[:, None] == gq[None, :]) & cat.exist[fq][:, None]
        i0, i1 = np.nonzero(ok)
        expected = Q0[i0] * n + Q1[i1]
        H = cat.hom(Q, P)
        produced = cat.comp[p0, H] * n + cat.comp[p1, H]
        counts = _factor_counts(produced, expected)
        _report_counts(report, "universal", counts,
                       lambda k: (Q, int(expected[k] // n), int(expected[k] % n)))
        if not report.verdict:
            return


def check_corner_pullback(cat, p0, p1, f, g, mode="pullback"):
    f = _existing(cat, f, "f")
    g = _existing(cat, g, "g")
    report = StructureReport()
    if cat.cod[f] != cat.cod[g]:
        report.add("corner", (f, g), "cod f is not cod g")
    if mode == "corner":
        return report.finalize()
    if mode != "pullback":
        raise InputError("mode must be 'corner' or 'pullback'")
    p0 = _existing(cat, p0, "p0")
    p1 = _existing(cat, p1, "p1")
    if not report.verdict:
        return report.finalize()
    if cat.dom[p0] != cat.dom[p1] or cat.cod[p0] != cat.dom[f] or cat.cod[p1] != cat.dom[g]:
        report.add("pullback.typing", (p0, p1), "legs do not form a span over the corner")
        return report.finalize()
    a, b = cat.c(f, p0), cat.c(g, p1)
    if not (a == b and cat.E(a)):
        report.add("pullback.commute", (p0, p1, f, g), "square does not commute")
        return report.finalize()
    _pullback_universal(cat, p0, p1, f, g, report)
    return report.finalize()


def find_pullback(cat, f, g):
    f = _existing(cat, f, "f")
    g = _existing(cat, g, "g")
    if cat.cod[f] != cat.cod[g]:
        raise InputError("find_pullback: (f, g) is not a corner")
    X, Y = int(cat.dom[f]), int(cat.dom[g])
    ids = cat.identity_list
    cones = {}
    for Q in ids:
        fq = cat.comp[f, cat.hom(Q, X)]
        gq = cat.comp[g, cat.hom(Q, Y)]
        cones[Q] = int(((fq[:, None] == gq[None, :]) & cat.exist[fq][:, None]).sum())
    report = StructureReport()
    tried = 0
    for P in ids:
        if any(cat.hom(Q, P).size != cones[Q] for Q in ids):
            continue
        for p0 in cat.hom(P, X):
            for p1 in cat.hom(P, Y):
                a, b = cat.c(f, int(p0)), cat.c(g, int(p1))
                if a != b:
                    continue
                tried += 1
                if check_corner_pullback(cat, int(p0), int(p1), f, g).verdict:
                    report.stats["candidates"] = tried
                    return (int(p0), int(p1)), report.finalize()
    report.stats["candidates"] = tried
    report.add("pullback.none", (f, g), "no pullback")
    return None, report.finalize()


# ------------------------------------------------------------ limits

def _validate_diagram(cat, d):
    nodes = tuple(_identity(cat, v, "diagram node") for v in d.nodes)
    for u, i, j in d.edges:
        if not (0 <= i < len(nodes) and 0 <= j < len(nodes)):
            raise InputError(f"edge ({u}, {i}, {j}) refers to a missing node")
        u = _existing(cat, u, "diagram edge")
        if cat.dom[u] != nodes[i] or cat.cod[u] != nodes[j]:
            raise InputError(f"edge {u} does not run from node {i} to node {j}")
    return nodes


def _cones_from(cat, X, nodes, edges):
    """All cones with apex X as an int array (count, len(nodes))."""
    cones = np.zeros((1, 0), dtype=np.int64)
    for i, v in enumerate(nodes):
        H = cat.hom(X, v)
        cones = np.concatenate([np.repeat(cones, H.size, axis=0), np.tile(H, cones.shape[0])[:, None]], axis=1)
        for u, s, t in edges:
            if max(s, t) == i and cones.shape[0]:
                ul = cat.comp[u, cones[:, s]]
                cones = cones[(ul == cones[:, t]) & cat.exist[ul]]
    return cones


def check_limit(cat, cone, d):
    nodes = _validate_diagram(cat, d)
    apex = _identity(cat, cone.apex, "apex")
    legs = tuple(int(x) for x in cone.legs)
    if len(legs) != len(nodes):
        raise InputError("cone must have one leg per diagram node")
    for i, leg in enumerate(legs):
        _existing(cat, leg, "leg")
        if cat.dom[leg] != apex or cat.cod[leg] != nodes[i]:
            raise InputError(f"leg {i} is not an arrow apex -> node {i}")
    report = StructureReport()
    for u, i, j in d.edges:
        x = cat.c(u, legs[i])
        if not (x == legs[j] and cat.E(x)):
            report.add("limit.commute", (u, i, j), "leg does not commute with edge")
    if not report.verdict:
        return report.finalize()
    total = 0
    for X in cat.identity_list:
        cones = _cones_from(cat, X, nodes, d.edges)
        total += cones.shape[0]
        H = cat.hom(X, apex)
        produced = {}
        for h in H:
            key = tuple(int(cat.comp[leg, h]) for leg in legs)
            produced[key] = produced.get(key, 0) + 1
        for row in cones:
            key = tuple(int(v) for v in row)
            cnt = produced.get(key, 0)
            if cnt != 1:
                kind = "existence" if cnt == 0 else "uniqueness"
                if report.first(f"universal.{kind}") is None:
                    report.add(f"universal.{kind}", (X,) + key, "mediating arrow " +
                               ("missing" if cnt == 0 else "not unique"))
    report.stats["cones"] = total
    return report.finalize()


# ------------------------------------------------------------ exponentials

def _times_identity(cat, h, src, dst):
    """h×id_A as the unique k : src.obj -> dst.obj matching both projections."""
    want1 = cat.c(h, src.proj1)
    K = cat.hom(src.object, dst.object)
    ok = (cat.comp[dst.proj1, K] == want1) & (cat.comp[dst.proj2, K] == src.proj2)
    hits = K[ok]
    return int(hits[0]) if hits.size == 1 else None


def check_exponential(cat, w, a, b, products):
    """Universal property of ``w.eval``: every f : X×A -> B is eval·(h×A) for one h."""
    a = _identity(cat, a)
    b = _identity(cat, b)
    Eo = _identity(cat, w.expo, "exponential object")
    ev = _existing(cat, w.eval, "eval")
    pe = w.product
    if pe.object is None or not cat.is_identity(pe.object):
        raise InputError("exponential witness carries no product object")
    if not (_typed(cat, pe.proj1, pe.object, Eo) and _typed(cat, pe.proj2, pe.object, a)):
        raise InputError("exponential witness product is not a product of expo and a")
    missing = [(X, a) for X in cat.identity_list if products.get((X, a)) is None]
    if missing:
        raise InputError(f"missing product witnesses for pairs {missing}")
    report = StructureReport()
    if not _typed(cat, ev, pe.object, b):
        report.add("exponential.typing", (ev,), "eval is not an arrow B^A×A -> B")
        return report.finalize()
    for X in cat.identity_list:
        px = products[(X, a)]
        H = cat.hom(X, Eo)
        images = []
        for h in H:
            k = _times_identity(cat, int(h), px, pe)
            if k is None:
                report.add("exponential.product_action", (X, int(h)), "h×A is not determined")
                return report.finalize()
            images.append(cat.c(ev, k))
        F = cat.hom(px.object, b)
        counts = _factor_counts(np.array(images, dtype=np.int64), F)
        _report_counts(report, "universal", counts, lambda k: (X, int(F[k])))
    return report.finalize()


def find_exponential(cat, a, b, products):
    ids = cat.identity_list
    for Eo in ids:
        pe = products.get((Eo, a))
        if pe is None:
            continue
        if any(cat.hom(X, Eo).size != cat.hom(products[(X, a)].object, b).size
               for X in ids if products.get((X, a)) is not None):
            continue
        for ev in cat.hom(pe.object, b):
            w = ExponentialWitness(Eo, int(ev), pe)
            if check_exponential(cat, w, a, b, products).verdict:
                return w
    return None


# ------------------------------------------------------------ subobject classifier

def _bang(cat, A, T):
    H = cat.hom(A, T)
    return int(H[0]) if H.size == 1 else None


def classifying_maps(cat, w, m):
    """All χ : B -> Ω making (m, !) a pullback of (χ, truth)."""
    A, B = cat.arrow(m)
    bang = _bang(cat, A, w.terminal)
    if bang is None:
        return []
    out = []
    for chi in cat.hom(B, w.omega):
        chi = int(chi)
        if check_corner_pullback(cat, m, bang, chi, w.truth).verdict:
            out.append(chi)
    return out


def check_subobject_classifier(cat, w):
    T = _identity(cat, w.terminal, "terminal")
    O = _identity(cat, w.omega, "omega")
    t = _existing(cat, w.truth, "truth")
    if not _typed(cat, t, T, O):
        raise InputError("truth must be an arrow 1 -> Ω")
    report = StructureReport()
    if any(cat.hom(A, T).size != 1 for A in cat.identity_list):
        report.add("classifier.terminal", (T,), "designated object is not terminal")
        return report.finalize()
    chis = {}
    monos = monomorphisms(cat)
    for m in monos:
        found = classifying_maps(cat, w, m)
        if not found:
            report.add("classifier.existence", (m,), "mono has no classifying map")
        elif len(found) > 1:
            report.add("classifier.uniqueness", (m, found[0], found[1]), "classifying map not unique")
        else:
            chis[m] = found[0]
    report.stats["monos"] = len(monos)
    report.info["chi"] = chis
    return report.finalize()


def find_subobject_classifier(cat, terminal):
    for O in cat.identity_list:
        for t in cat.hom(terminal, O):
            w = SubobjectClassifierWitness(O, int(t), terminal)
            if check_subobject_classifier(cat, w).verdict:
                return w
    return None


# ------------------------------------------------------------ ladder

def analyze_structure(cat):
    """Terminal, products, exponentials, classifier, topos; one verdict per rung."""
    report = StructureReport()
    ladder = {}
    T, _ = find_terminal(cat)
    ladder["has_terminal"] = T is not None
    ladder["terminal"] = T
    prod_report, products = find_binary_products(cat)
    ladder["has_binary_products"] = prod_report.verdict
    ladder["failing_pair"] = prod_report.info["failing_pairs"][0] if not prod_report.verdict else None
    ladder["cartesian"] = ladder["has_terminal"] and ladder["has_binary_products"]
    if ladder["has_binary_products"]:
        missing = []
        for a, b in itertools.product(cat.identity_list, repeat=2):
            if find_exponential(cat, a, b, products) is None:
                missing.append((a, b))
        ladder["has_exponentials"] = not missing
        ladder["failing_exponential"] = missing[0] if missing else None
    else:
        ladder["has_exponentials"] = False
        ladder["failing_exponential"] = None
    ladder["cartesian_closed"] = ladder["cartesian"] and ladder["has_exponentials"]
    w = find_subobject_classifier(cat, T) if T is not None else None
    ladder["has_subobject_classifier"] = w is not None
    ladder["omega"] = w.omega if w else None
    ladder["truth"] = w.truth if w else None
    ladder["is_topos"] = ladder["cartesian_closed"] and ladder["has_subobject_classifier"]

    if not ladder["has_terminal"]:
        report.add("ladder.terminal", (), "no terminal object")
    if not ladder["has_binary_products"]:
        report.add("ladder.binary_products", ladder["failing_pair"], "no product for this pair")
    if not ladder["has_exponentials"]:
        report.add("ladder.exponentials", ladder["failing_exponential"] or (), "exponentials missing")
    if not ladder["has_subobject_classifier"]:
        report.add("ladder.subobject_classifier", (), "no subobject classifier")
    report.info["ladder"] = ladder
    report.info["classifier"] = w
    report.stats["product_candidates"] = prod_report.stats["candidates"]
    return report.finalize()


def monos_are_equalizers(cat, classifier=None, max_pairs=100000):
    """Certify every mono as an equalizer; classifier pair (χ_m, truth·!) is tried first."""
    report = StructureReport()
    certificates = {}
    monos = monomorphisms(cat)
    for m in monos:
        A, B = cat.arrow(m)
        found = None
        if classifier is not None:
            chis = classifying_maps(cat, classifier, m)
            bang = _bang(cat, B, classifier.terminal)
            if len(chis) == 1 and bang is not None:
                g = cat.c(classifier.truth, bang)
                if check_equalizer(cat, m, chis[0], g).verdict:
                    found = (chis[0], g)
        if found is None:
            budget = sum(cat.hom(B, Y).size ** 2 for Y in cat.identity_list)
            if budget > max_pairs:
                raise ResourceError(f"parallel-pair search for mono {m} needs {budget} checks")
            for Y in cat.identity_list:
                H = cat.hom(B, Y)
                for f, g in itertools.product(H, repeat=2):
                    if check_equalizer(cat, m, int(f), int(g)).verdict:
                        found = (int(f), int(g))
                        break
                if found:
                    break
        if found is None:
            report.add("mono_not_equalizer", (m,), "no parallel pair has this mono as equalizer")
        else:
            certificates[m] = found
    report.stats.update({"monos": len(monos), "equalizers": len(certificates)})
    report.info["certificates"] = certificates
    return report.finalize()
