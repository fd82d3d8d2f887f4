"""Print N_q(n), the number of monic irreducibles of degree n, with the lower-bound check.

    python scripts/count_table.py --q 2 3 4 5 7 8 9 --n 8
"""
import argparse

from polyekr.poly import count_irreducibles, irreducible_lower_bound_holds


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5, 7, 8, 9])
    ap.add_argument("--n", type=int, default=8, help="largest degree")
    args = ap.parse_args(argv)
    print("q \\ n " + "".join(f"{n:>10d}" for n in range(1, args.n + 1)))
    for q in args.q:
        cells = []
        for n in range(1, args.n + 1):
            mark = "" if irreducible_lower_bound_holds(q, n) else "!"
            cells.append(f"{count_irreducibles(q, n):>9d}{mark or ' '}")
        print(f"{q:<6d}" + "".join(cells))
    print("('!' marks a failure of N >= q^n/n - q^(n/2)/n - q^(n/3))")


if __name__ == "__main__":
    main()
