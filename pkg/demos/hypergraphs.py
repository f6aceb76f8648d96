"""Split complete k-graphs into perfect matchings and order their edges greedily.

Run with ``python demos/hypergraphs.py``.
"""

from __future__ import annotations

from matchseq.hyper import baranyai, eval_hyper_ms_r, greedy_hyper_ordering, hyper_upper_bound, katona_bounds


def main() -> None:
    for n, k in [(6, 3), (8, 4), (12, 3)]:
        d = baranyai(n, k)
        print(f"K^{k}_{n}: {len(d.parts)} perfect matchings of {len(d.parts[0])} edges each")
        for r in (1, 2, 3):
            _, _, lo, clo = katona_bounds(n, k, r)
            v = eval_hyper_ms_r(greedy_hyper_ordering(d, r), r).value
            c = eval_hyper_ms_r(greedy_hyper_ordering(d, r, cyclic=True), r, cyclic=True).value
            print(f"  r={r}: ms_r {v} (>= {lo}), cms_r {c} (>= {clo}), upper {hyper_upper_bound(n, k, r)}")


if __name__ == "__main__":
    main()
