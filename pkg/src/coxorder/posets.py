"""Small helpers for finite posets: covers, maximal chains, DOT output."""


def covers(items, leq):
    "pairs (a, b) with a < b and nothing strictly between"
    items = list(items)
    less = {a: [b for b in items if b != a and leq(a, b)] for a in items}
    out = []
    for a in items:
        up = less[a]
        for b in up:
            if not any(c != b and leq(c, b) for c in up):
                out.append((a, b))
    return out


def maximal_chains(items, leq):
    "all maximal chains, as lists from bottom to top"
    items = list(items)
    cov = covers(items, leq)
    up = {a: [] for a in items}
    has_lower = set()
    for a, b in cov:
        up[a].append(b)
        has_lower.add(b)
    out = []

    def walk(chain):
        nxt = up[chain[-1]]
        if not nxt:
            out.append(list(chain))
            return
        for b in nxt:
            chain.append(b)
            walk(chain)
            chain.pop()

    for a in items:
        if a not in has_lower:
            walk([a])
    return out


def subset_leq(a, b):
    return a <= b


def to_dot(items, leq, label=str, name="poset"):
    items = list(items)
    ids = {a: "n%d" % i for (i, a) in enumerate(items)}
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for a in items:
        lines.append('  %s [label="%s"];' % (ids[a], label(a).replace('"', "'")))
    for a, b in sorted(covers(items, leq), key=lambda e: (items.index(e[0]), items.index(e[1]))):
        lines.append("  %s -> %s;" % (ids[a], ids[b]))
    lines.append("}")
    return "\n".join(lines) + "\n"
