"""Compare the compiled and pure-Python kernels on larger inputs than ``greedyscs bench``.

    python benchmarks/bench_backends.py [--repeat 5]
"""
import argparse

from greedyscs import bench, kernels

SIZES = [
    dict(dp_n=10, family_n=10, m=200),
    dict(dp_n=14, family_n=40, m=1000),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print("backends:", ", ".join(kernels.available_backends()))
    for sizes in SIZES:
        print(f"\n-- {sizes}")
        print(bench.format_rows(bench.run_bench(args.repeat, **sizes)))


if __name__ == "__main__":
    main()
