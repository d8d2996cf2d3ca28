"""Time the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter so the module-level selection in
``origami_codes.kernels`` applies to the whole library, not just the kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, time
from origami_codes import kernels
from origami_codes.orbit import s_plus
from origami_codes.perm import canonical_pair
from origami_codes.surface import enumerate_surfaces
from origami_codes.veech import group_G_X
from origami_codes.surface import eierlegende_wollmilchsau

rng = random.Random(1)
def rperm(n):
    a = list(range(1, n + 1)); rng.shuffle(a); return a
from origami_codes.perm import Perm
pairs = [(Perm(rperm(9)), Perm(rperm(9))) for _ in range(3000)]

def timed(fn):
    best = None
    for _ in range(REPEAT):
        t = time.perf_counter(); fn(); dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best

surfaces6 = enumerate_surfaces(6)
print(json.dumps({
    "backend": kernels.BACKEND,
    "canonical_pair x3000 (n=9)": timed(lambda: [canonical_pair(a, b) for a, b in pairs]),
    "s_plus over all n=6 classes": timed(lambda: [s_plus(X) for X in surfaces6]),
    "G_X of the Wollmilchsau": timed(lambda: group_G_X(eierlegende_wollmilchsau(), method="anchored")),
}))
"""


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("ORIGAMI_CODES_PURE", None)
    if pure:
        env["ORIGAMI_CODES_PURE"] = "1"
    code = f"REPEAT = {repeat}\n" + WORKLOAD
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run_backend(False, args.repeat), run_backend(True, args.repeat)
    if fast["backend"] != "cython":
        print("compiled extension not built; both runs use the fallback")
    names = [k for k in fast if k != "backend"]
    width = max(map(len, names))
    print(f"{'workload':<{width}}  {fast['backend']:>9}  {'python':>9}  speedup")
    for k in names:
        print(f"{k:<{width}}  {fast[k]:9.3f}  {slow[k]:9.3f}  {slow[k] / fast[k]:6.1f}x")


if __name__ == "__main__":
    main()
