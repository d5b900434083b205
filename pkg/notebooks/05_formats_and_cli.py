"""
Formats and the command line
============================

Edge lists, graph6 and DOT, and the same operations through ``stablecore``.
"""

import subprocess
import sys

from stablecore import core_pendant_report, parse_graph6, spider, to_dot, to_edge_list, to_graph6

t = spider(3)
print(to_edge_list(t), end="")
g6 = to_graph6(t)
print("graph6:", g6, "round trip ok:", parse_graph6(g6).edges == t.edges)
print(to_dot(t, core_pendant_report(t)))


def cli(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "stablecore.cli", *args], input=stdin, capture_output=True, text=True)
    print("$ stablecore", " ".join(args), f"(exit {proc.returncode})")
    print(proc.stdout or proc.stderr, end="")


cli("generate", "--spider", "3")
cli("analyze", "--edges", "4 3;0 1;1 2;2 3")
cli("analyze", "--edges", "3 3;0 1;1 2;0 2")
cli("verify", "--theorem", "th6", "--max-n", "6")
cli("convert", "-", "--to", "graph6", stdin=to_edge_list(t))
