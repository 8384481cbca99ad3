#!/usr/bin/env python3
"""Writes the JSON fixture corpus under fixtures/ (run from the repo root)."""

import json
import pathlib
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")


def natdim(alg):
    s, n = alg[0], int(alg[1:])
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[s]


def rank(alg):
    return int(alg[1:])


def omega(alg):
    return [1] + [0] * (rank(alg) - 1)


def omega_star(alg):
    return list(reversed(omega(alg))) if alg[0] == "A" else omega(alg)


def zero(alg):
    return [0] * rank(alg)


def summand(weights, mult=1):
    return {"weights": weights, "mult": mult}


def natural_plus_trivial(src, tgt):
    """Natural module of tgt over the simple src: omega plus trivials."""
    out = [summand([omega(src)])]
    t = natdim(tgt) - natdim(src)
    if t:
        out.append(summand([zero(src)], t))
    return out


def level(components, ambient, branching, conatural=None):
    lv = {"components": components, "ambient": ambient, "ambient_branching": branching}
    if conatural is not None:
        lv["conatural_branching"] = conatural
    return lv


def system(levels, edges):
    return {"format": "lielimits-system/1", "levels": levels, "edges": [{"branchings": b} for b in edges]}


def chain_system(algs):
    """Each level is one algebra embedded in itself, linked by omega + trivials."""
    levels = [level([a], a, [summand([omega(a)])]) for a in algs]
    edges = [[natural_plus_trivial(a, b)] for a, b in zip(algs, algs[1:])]
    return system(levels, edges)


def paired_system(ns, extra_trivial=0):
    """Level n: two copies of A_n inside A_{2n+1+extra}."""
    levels, edges = [], []
    for n in ns:
        a = f"A{n}"
        br = [summand([omega(a), zero(a)]), summand([zero(a), omega(a)])]
        if extra_trivial:
            br.append(summand([zero(a), zero(a)], extra_trivial))
        levels.append(level([a, a], f"A{2 * n + 1 + extra_trivial}", br))
    for n, m in zip(ns, ns[1:]):
        a, b = f"A{n}", f"A{m}"
        t = natdim(b) - natdim(a)
        first = [summand([omega(a), zero(a)]), summand([zero(a), zero(a)], t)]
        second = [summand([zero(a), omega(a)]), summand([zero(a), zero(a)], t)]
        edges.append([first, second])
    return system(levels, edges)


def partition_system(levels_count, extra_trivial=0):
    """Level n: n copies of A1 in A_{2n-1+extra}; each level adds one copy."""
    levels, edges = [], []
    for n in range(1, levels_count + 1):
        comps = ["A1"] * n
        br = []
        for j in range(n):
            br.append(summand([[1] if i == j else [0] for i in range(n)]))
        if extra_trivial:
            br.append(summand([[0]] * n, extra_trivial))
        levels.append(level(comps, f"A{2 * n - 1 + extra_trivial}", br))
    for n in range(1, levels_count):
        blocks = []
        for k in range(n + 1):
            if k < n:
                blocks.append([summand([[1] if i == k else [0] for i in range(n)])])
            else:
                blocks.append([summand([[0]] * n, 2)])
        edges.append(blocks)
    return system(levels, edges)


def example4(ns):
    levels = []
    for n in ns:
        a = f"A{n}"
        levels.append(level([a], f"A{n + 1}", [summand([omega(a)]), summand([zero(a)])],
                            conatural=[summand([omega_star(a)])]))
    edges = [[natural_plus_trivial(f"A{n}", f"A{m}")] for n, m in zip(ns, ns[1:])]
    return system(levels, edges)


def tensor_merge(extra_levels):
    levels = [level(["A1", "A1"], "A3", [summand([[1], [1]])])]
    edges = [[[summand([[1], [1]])]]]
    algs = ["A3"] + extra_levels
    levels += [level([a], a, [summand([omega(a)])]) for a in algs]
    edges += [[natural_plus_trivial(a, b)] for a, b in zip(algs, algs[1:])]
    return system(levels, edges)


def general_edge():
    levels = [level(["A1"], "A2", [summand([[2]])])]
    algs = ["A2", "A3", "A4"]
    levels += [level([a], a, [summand([omega(a)])]) for a in algs]
    edges = [[[summand([[2]])]]] + [[natural_plus_trivial(a, b)] for a, b in zip(algs, algs[1:])]
    return system(levels, edges)


def bad_alpha():
    levels = [level(["A1"], "A3", [summand([[1]], 2)]), level(["A3"], "A3", [summand([omega("A3")])])]
    return system(levels, [[natural_plus_trivial("A1", "A3")]])


def embedding(source, target, branching):
    return {"format": "lielimits-embedding/1", "source": source, "target": target, "branching": branching}


def subspace(space="V", generators=(), tail_from=None, kernels=()):
    d = {"format": "lielimits-subspace/1", "space": space,
         "generators": [{str(i): c for i, c in g.items()} for g in generators],
         "kernels": [{"head": list(h), "tail": t} for h, t in kernels]}
    if tail_from is not None:
        d["tail_from"] = tail_from
    return d


FIXTURES = {
    # finite prefixes
    "S1.json": chain_system(["A1", "A2", "A3", "A4", "A5"]),
    "S2.json": paired_system([1, 2, 3, 4]),
    "S3.json": partition_system(4),
    "S4.json": chain_system(["B3", "D4", "B4", "D5"]),
    "example3.json": partition_system(4, extra_trivial=1),
    "example4.json": example4([1, 2, 3, 4]),
    "tensor_merge.json": tensor_merge([]),
    "tensor_merge3.json": tensor_merge(["A4"]),
    "general_edge.json": general_edge(),
    "bad_alpha.json": bad_alpha(),
    # embeddings and chains
    "std_a5_a9.json": embedding(["A5"], "A9", natural_plus_trivial("A5", "A9")),
    "diagonal_2w.json": embedding(["A2"], "A5", [summand([[1, 0]], 2)]),
    "diagonal_wwstar.json": embedding(["A2"], "A5", [summand([[1, 0]]), summand([[0, 1]])]),
    "general_a1_a2.json": embedding(["A1"], "A2", [summand([[2]])]),
    "chain_a1.json": {
        "format": "lielimits-chain/1",
        "first": [
            {"source": ["A1"], "target": "A2", "branching": [summand([[2]])]},
            {"source": ["A1"], "target": "A1", "branching": [summand([[1]])]},
        ],
        "second": {"source": ["A2", "A1"], "target": "A4",
                   "branching": [summand([[1, 0], [0]]), summand([[0, 0], [1]])]},
    },
    # subspaces
    "codim1_kernel.json": subspace(tail_from=1, kernels=[([], 1)]),
    "codim1_kernel_dual.json": subspace(space="V*", tail_from=1, kernels=[([], 1)]),
    "codim1_kernel_shifted.json": subspace(tail_from=1, kernels=[([2], 1)]),
    "tail_from2.json": subspace(tail_from=2),
    "tail_from2_copy.json": subspace(generators=[{2: 1}], tail_from=2),
    "span_v1.json": subspace(generators=[{1: 1}]),
    "span_v1_v4.json": subspace(generators=[{1: 1}, {2: 1}, {3: 1}, {4: 1}]),
    "dim2_nondeg.json": subspace(generators=[{1: 1}, {2: 1}]),
    "codim2_kernel.json": subspace(tail_from=1, kernels=[([], 1), ([1], 2)]),
    "not_closed.json": subspace(tail_from=3, kernels=[([], 1)]),
    "complement_v1_v4.json": subspace(tail_from=5),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in FIXTURES.items():
        (OUT / name).write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {len(FIXTURES)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
