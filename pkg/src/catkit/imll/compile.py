"""Translation of checked IMLL proofs into free-SMCC morphism terms.

A proof of Γ ⊢ C becomes a term from the left-nested context shape of Γ
(the unit for an empty Γ) to C.
"""
from .proofs import conclusion
from .syntax import Lolli, Tensor
from .terms import (UNIT, Curry, Eval, Gamma, IdOf, Leaf, Pair, comp, coherence_iso, context_shape,
                    left_nested, shape_formula, tensor)


def _in_place(items, k, t):
    """Apply t at item k of the left-nested shape over items, identities elsewhere."""
    if k == 0:
        out = t
    else:
        out = tensor(IdOf(shape_formula(left_nested(items[:k]))), t)
    for s in items[k + 1:]:
        out = tensor(out, IdOf(shape_formula(s)))
    return out


def _compile(node, path):
    subs = [_compile(p, f"{path}.{k}") for k, p in enumerate(node.premises)]
    prem = tuple(s for s, _ in subs)
    terms = [t for _, t in subs]
    seq = conclusion(node, prem, path)
    ctx = [Leaf(f) for f in seq.context]
    r = node.rule
    if r in ("ax", "1r"):
        return seq, IdOf(seq.conclusion)
    if r == "1l":
        items = list(ctx)
        items[node.pos] = UNIT
        t = comp(terms[0], coherence_iso(left_nested(items), context_shape(prem[0].context)))
        return seq, t
    if r == "xchg":
        i = node.pos
        a, b = seq.context[i], seq.context[i + 1]
        grouped = ctx[:i] + [Pair(Leaf(a), Leaf(b))] + ctx[i + 2:]
        swapped = ctx[:i] + [Pair(Leaf(b), Leaf(a))] + ctx[i + 2:]
        t = comp(terms[0],
                 coherence_iso(left_nested(swapped), context_shape(prem[0].context)),
                 _in_place(grouped, i, Gamma(a, b)),
                 coherence_iso(left_nested(ctx), left_nested(grouped)))
        return seq, t
    if r == "tr":
        p, q = prem
        split = Pair(context_shape(p.context), context_shape(q.context))
        return seq, comp(tensor(terms[0], terms[1]), coherence_iso(left_nested(ctx), split))
    if r == "tl":
        i = node.pos
        f = seq.context[i]
        items = ctx[:i] + [Pair(Leaf(f.left), Leaf(f.right))] + ctx[i + 1:]
        return seq, comp(terms[0], coherence_iso(left_nested(items), context_shape(prem[0].context)))
    if r == "lr":
        (p,) = prem
        a = p.context[0]
        rest = context_shape(seq.context)
        body = comp(terms[0], coherence_iso(Pair(Leaf(a), rest), context_shape(p.context)))
        return seq, Curry(a, shape_formula(rest), body)
    if r == "ll":
        p, q = prem
        i = node.pos
        a, b = p.conclusion, q.context[i]
        qitems = [Leaf(f) for f in q.context]
        items = qitems[:i] + [Pair(context_shape(p.context), Leaf(Lolli(a, b)))] + qitems[i + 1:]
        step = comp(Eval(a, b), tensor(terms[0], IdOf(Lolli(a, b))))
        t = comp(terms[1], _in_place(items, i, step), coherence_iso(left_nested(ctx), left_nested(items)))
        return seq, t
    if r == "cut":
        p, q = prem
        i = node.pos
        qitems = [Leaf(f) for f in q.context]
        items = qitems[:i] + [context_shape(p.context)] + qitems[i + 1:]
        t = comp(terms[1], _in_place(items, i, terms[0]), coherence_iso(left_nested(ctx), left_nested(items)))
        return seq, t
    raise AssertionError(r)


def compile_with_sequent(tree):
    return _compile(tree, "root")


def compile_proof(tree, env=None):
    """Term for a proof tree. Compilation is syntactic, so ``env`` is not consulted."""
    return _compile(tree, "root")[1]
