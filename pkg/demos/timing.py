"""Time the subset sum on a closed 16-edge graph (65536 subsets).

Pass a worker count as the first argument to compare; extra workers only
help when that many CPUs are available.
"""
import os
import random
import sys
import time

from tensorpoly.stranded import random_stranded_graph
from tensorpoly.tpoly import t_polynomial

workers = int(sys.argv[1]) if len(sys.argv) > 1 else 1
G = random_stranded_graph(8, random.Random(16))
print(f"{len(G.active)} edges, {os.cpu_count()} CPU(s), {workers} worker(s)")
start = time.perf_counter()
T = t_polynomial(G, workers=workers)
print(f"{time.perf_counter() - start:.2f} s, {len(T.terms)} terms")
print(T)
