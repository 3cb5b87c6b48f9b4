"""Brute-force desk oracle used to freeze expected values in the C++ tests.

Parses the .cgm fixtures with a throwaway reader and evaluates every
stability concept by fixed-point iteration over (state, last mover) pairs.
Run: python3 tests/tools/desk_oracle.py fixtures/elmira.cgm
"""
import itertools
import sys


def load(path):
    dms, states, arcs, prefs, env = [], [], [], {}, False
    for raw in open(path):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] == "dm":
            dms.append(line[1])
        elif line[0] == "env":
            env = True
        elif line[0] == "state":
            states.append(line[1])
        elif line[0] == "move":
            arcs.append((line[1], line[2], line[4]))
        elif line[0] == "prefer":
            dm = line[1].rstrip(":")
            toks = line[2:]
            classes = [[toks[0]]]
            for op, s in zip(toks[1::2], toks[2::2]):
                if op == ">":
                    classes.append([s])
                else:
                    classes[-1].append(s)
            rank = {}
            for k, cls in enumerate(classes):
                for s in cls:
                    rank[s] = len(classes) - 1 - k
            prefs[dm] = rank
    return dms, states, arcs, prefs


def closure(arcs, prefs, movers, start, rule, cond):
    """States reachable by nonempty legal sequences (fixed point)."""
    frontier = {(start, None)}
    seen = set()
    while True:
        new = set()
        for (s, last) in frontier | seen:
            for (o, a, b) in arcs:
                if a != s or o not in movers:
                    continue
                if rule == "no-repeat" and o == last:
                    continue
                if cond != "any":
                    if o not in prefs:
                        continue
                    d = prefs[o][b] - prefs[o][a]
                    if cond == "weak" and d < 0:
                        continue
                    if cond == "strict" and d <= 0:
                        continue
                if (b, o) not in seen:
                    new.add((b, o))
        if not new:
            return {s for (s, _) in seen}
        seen |= new


def verdicts(model, rule="no-repeat", cnash="owner", cmovers="exclude"):
    dms, states, arcs, prefs = model
    out = {}
    for i in dms:
        r = prefs[i]
        others = set(dms) - {i}
        for s in states:
            imp = [b for (o, a, b) in arcs if o == i and a == s and r[b] > r[s]]
            weak = lambda x: r[x] <= r[s]
            nash = not imp
            gmr = all(any(weak(x) for x in closure(arcs, prefs, others, s1, rule, "any")) for s1 in imp)
            smr = all(any(weak(x) and all(weak(y) for (o, a, y) in arcs if o == i and a == x)
                          for x in closure(arcs, prefs, others, s1, rule, "any")) for s1 in imp)
            seq = all(any(weak(x) for x in closure(arcs, prefs, others, s1, rule, "strict")) for s1 in imp)
            owners = {i} if cnash == "owner" else {o for (o, _, _) in arcs}
            c_nash = not any(o in owners and a == s and r[b] > r[s] for (o, a, b) in arcs)
            movers = others if cmovers == "exclude" else set(dms)
            c_gmr = not any(r[x] > r[s] for x in closure(arcs, prefs, movers, s, rule, "weak"))
            c_smr = not any(r[x] > r[s] for x in closure(arcs, prefs, movers, s, rule, "strict"))
            into = any(s in closure(arcs, prefs, set(dms), s0, rule, "strict") for s0 in states if s0 != s)
            out_ = bool(closure(arcs, prefs, set(dms), s, rule, "strict"))
            c_seq = into and not out_
            out[(s, i)] = dict(nash=nash, gmr=gmr, smr=smr, seq=seq, c_nash=c_nash,
                               c_gmr=c_gmr, c_smr=c_smr, c_seq=c_seq)
    return out


def equilibria(model, **kw):
    dms, states, _, _ = model
    v = verdicts(model, **kw)
    concepts = ["nash", "gmr", "smr", "seq", "c_nash", "c_gmr", "c_smr", "c_seq"]
    return {c: [s for s in states if all(v[(s, i)][c] for i in dms)] for c in concepts}


if __name__ == "__main__":
    m = load(sys.argv[1])
    for rule, cnash, cmovers in itertools.product(["no-repeat", "free"], ["owner", "literal"], ["exclude", "all"]):
        print(rule, cnash, cmovers, equilibria(m, rule=rule, cnash=cnash, cmovers=cmovers))
