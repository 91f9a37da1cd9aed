#!/usr/bin/env python3
"""Flags benchmark regressions between two google-benchmark JSON dumps.

Usage:
  lzc_bench_parse --benchmark_out=baseline.json --benchmark_out_format=json
  ... change something ...
  lzc_bench_parse --benchmark_out=current.json --benchmark_out_format=json
  python3 check_regression.py baseline.json current.json [threshold]

Exits 1 when any benchmark slowed down by more than the threshold (2x by
default).
"""
import json
import sys


def load(path):
    with open(path) as f:
        data = json.load(f)
    return {b["name"]: b["real_time"] for b in data["benchmarks"] if "real_time" in b}


def main():
    if len(sys.argv) < 3:
        print(__doc__)
        return 2
    baseline = load(sys.argv[1])
    current = load(sys.argv[2])
    threshold = float(sys.argv[3]) if len(sys.argv) > 3 else 2.0
    bad = []
    for name, t in current.items():
        if name in baseline and baseline[name] > 0:
            ratio = t / baseline[name]
            marker = " REGRESSION" if ratio > threshold else ""
            print(f"{name}: {ratio:.2f}x{marker}")
            if ratio > threshold:
                bad.append(name)
    if bad:
        print(f"{len(bad)} benchmark(s) regressed beyond {threshold}x")
        return 1
    print("no regressions")
    return 0


if __name__ == "__main__":
    sys.exit(main())
