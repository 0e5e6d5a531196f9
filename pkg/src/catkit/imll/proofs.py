"""Bottom-up recomputation of sequents from IMLL proof trees."""
from ..errors import ProofError
from .syntax import ONE, Lolli, Sequent, Tensor


def _pos(node, path, ctx, width=1):
    if node.pos is None or not 0 <= node.pos <= len(ctx) - width:
        raise ProofError(f"{node.rule}: position {node.pos} out of range for a context of length {len(ctx)}",
                         path)
    return node.pos


def conclusion(node, premises, path="root"):
    """Conclusion of one rule application from its premises' sequents."""
    r = node.rule
    if r == "ax":
        return Sequent((node.formula,), node.formula)
    if r == "1r":
        return Sequent((), ONE)
    if r == "1l":
        (p,) = premises
        if node.pos is None or not 0 <= node.pos <= len(p.context):
            raise ProofError(f"1l: position {node.pos} out of range", path)
        i = node.pos
        return Sequent(p.context[:i] + (ONE,) + p.context[i:], p.conclusion)
    if r == "xchg":
        (p,) = premises
        i = _pos(node, path, p.context, 2)
        c = list(p.context)
        c[i], c[i + 1] = c[i + 1], c[i]
        return Sequent(tuple(c), p.conclusion)
    if r == "tr":
        p, q = premises
        return Sequent(p.context + q.context, Tensor(p.conclusion, q.conclusion))
    if r == "tl":
        (p,) = premises
        i = _pos(node, path, p.context, 2)
        c = p.context
        return Sequent(c[:i] + (Tensor(c[i], c[i + 1]),) + c[i + 2:], p.conclusion)
    if r == "lr":
        (p,) = premises
        if not p.context:
            raise ProofError("lr: premise context is empty", path)
        return Sequent(p.context[1:], Lolli(p.context[0], p.conclusion))
    if r == "ll":
        p, q = premises
        i = _pos(node, path, q.context)
        b = q.context[i]
        return Sequent(q.context[:i] + p.context + (Lolli(p.conclusion, b),) + q.context[i + 1:], q.conclusion)
    if r == "cut":
        p, q = premises
        i = _pos(node, path, q.context)
        if q.context[i] != p.conclusion:
            raise ProofError(f"cut: right premise has {q.context[i]} at position {i}, "
                             f"left premise proves {p.conclusion}", path)
        return Sequent(q.context[:i] + p.context + q.context[i + 1:], q.conclusion)
    raise ProofError(f"unknown rule {r!r}", path)


def check_proof(tree, path="root"):
    prem = tuple(check_proof(t, f"{path}.{k}") for k, t in enumerate(tree.premises))
    return conclusion(tree, prem, path)
