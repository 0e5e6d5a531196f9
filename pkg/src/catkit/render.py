"""Fixed-template ASCII rendering of pullback squares and product forks."""


def _node(cat, x, end, fallback):
    if cat is None:
        return fallback
    return str(int(cat.dom[x] if end == "dom" else cat.cod[x]))


def render_pullback(p0, p1, f, g, cat=None):
    P = _node(cat, p0, "dom", "P")
    X = _node(cat, p0, "cod", "X")
    Y = _node(cat, p1, "cod", "Y")
    Z = _node(cat, f, "cod", "Z")
    top = f" p0={p0} "
    bot = f" g={g} "
    width = max(len(top), len(bot)) + 4
    left = f"p1={p1}"
    pad = " " * len(left)
    lw = max(len(P), len(Y))
    rows = [
        f"{pad} {P.rjust(lw)} {('-' * 2 + top).ljust(width, '-')}> {X}",
        f"{pad} {'|'.rjust(lw)} {' ' * width}  |",
        f"{left} {'|'.rjust(lw)} {' ' * width}  | f={f}",
        f"{pad} {'v'.rjust(lw)} {' ' * width}  v",
        f"{pad} {Y.rjust(lw)} {('-' * 2 + bot).ljust(width, '-')}> {Z}",
    ]
    return "\n".join(r.rstrip() for r in rows) + "\n"


def render_product(obj, proj1, proj2, cat=None):
    P = str(obj) if cat is not None else "P"
    A = _node(cat, proj1, "cod", "A")
    B = _node(cat, proj2, "cod", "B")
    l1, l2 = f"proj1={proj1}", f"proj2={proj2}"
    indent = len(l1) + 2
    rows = [
        " " * (indent + 3) + P,
        " " * indent + "/   \\",
        l1 + " /     \\ " + l2,
        " " * (indent - 2) + "v       v",
        " " * (indent - 2) + A.ljust(8) + B,
    ]
    return "\n".join(r.rstrip() for r in rows) + "\n"


def render_witness(kind, fields, cat=None):
    if kind == "pullback":
        return render_pullback(fields["p0"], fields["p1"], fields["f"], fields["g"], cat)
    return render_product(fields["object"], fields["proj1"], fields["proj2"], cat)
