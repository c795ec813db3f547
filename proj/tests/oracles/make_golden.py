#!/usr/bin/env python3
"""Independent brute-force oracle for golden files under tests/data.

Uses networkx on explicitly constructed digraphs; shares no code with the
C++ library. Regenerate with:

    python3 tests/oracles/make_golden.py tests/data
"""
import itertools
import json
import sys
from pathlib import Path

import networkx as nx

SUBADD = ((1, -1), (1, 1))


def move_graph(matrix, n):
    m = len(matrix)
    g = nx.DiGraph()
    for x in itertools.product(range(n), repeat=m):
        y = tuple(sum(matrix[i][j] * x[j] for j in range(m)) % n for i in range(m))
        g.add_edge(x, y)
    return g


def spectrum(g):
    counts = {}
    for cycle in nx.simple_cycles(g):
        counts[len(cycle)] = counts.get(len(cycle), 0) + 1
    return dict(sorted(counts.items()))


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    terms = [1] + [nx.number_weakly_connected_components(move_graph(SUBADD, n)) for n in range(2, 21)]
    (out / "oeis_golden.txt").write_text("".join(f"{t}\n" for t in terms))

    spectra = {str(n): {str(k): v for k, v in spectrum(move_graph(SUBADD, n)).items()} for n in range(2, 41)}
    (out / "subadd_spectra.json").write_text(json.dumps(spectra, indent=1, sort_keys=False) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
