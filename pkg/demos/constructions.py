"""Walk through the explicit constructions and compare them with exact search.

Run with ``python demos/constructions.py``.
"""

from __future__ import annotations

from matchseq import SearchConfig, complete_graph, construct_cms, construct_ms, eval_cms_r, eval_ms_r, exact_cms
from matchseq.assemble import upper_bound
from matchseq.serialize import ordering_to_text


def main() -> None:
    print("linear orderings of K_n")
    for n, r in [(8, 1), (9, 2), (9, 3), (11, 5), (11, 7)]:
        plan, o = construct_ms(n, r)
        print(f"  K_{n:<2} r={r}  case={plan.case_tag:<18} ms_r={eval_ms_r(o, r).value:<3} bound={upper_bound(n, r)}")

    print("\ncyclic orderings of K_n")
    for n, r in [(6, 2), (7, 3), (9, 4), (11, 4)]:
        plan, o = construct_cms(n, r)
        print(f"  K_{n:<2} r={r}  case={plan.case_tag:<20} cms_r={eval_cms_r(o, r).value:<3} bound={upper_bound(n, r)}")

    # the odd-n even-r cyclic case only promises bound - 1; search can do better
    _, o = construct_cms(7, 2)
    cert = exact_cms(complete_graph(7), 2, SearchConfig(node_budget=5_000_000))
    print(f"\nK_7 r=2: constructed cms_2 = {eval_cms_r(o, 2).value}, exact = {cert.optimum} (exhausted={cert.exhausted})")
    print("an optimal cyclic ordering:")
    print(ordering_to_text(cert.ordering))


if __name__ == "__main__":
    main()
