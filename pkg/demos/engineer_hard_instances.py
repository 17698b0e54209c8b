"""Build a bounded-pathwidth hard instance around a planted clique.

Starting from a small graph with a known triangle, the generator emits a
length-bounded cut instance whose cheap cuts are exactly the k-cliques of
the source.  We plant the solution cut, verify it, decode the clique back
out, probe the cut for redundant edges (a report, not a guarantee), and
certify the pathwidth bound with an explicit decomposition.
"""

from lbcut import (
    CliqueInstance,
    Graph,
    bfs_distances,
    build_pw_witness,
    decode_pw,
    forward_cut_pw,
    gen_pw,
    verify_cut,
    verify_path_decomposition,
)

# triangle {0,1,2} plus a second cycle so that m >= n holds
source = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)])
cq = CliqueInstance(source, k=3)
clique = (0, 1, 2)

out = gen_pw(cq)
h = out.instance
print(f"source: n={source.n} m={source.m}, planted 3-clique {clique}")
print(f"hard instance: n={h.graph.n} m={h.graph.m} "
      f"beta={h.beta} (=2k^2) lambda={h.lam} (=8*eta+2n+1, eta={out.params['eta']})")
print(f"empty-cut distance s->t: {bfs_distances(h.graph, h.s)[h.t]} <= lambda")

cut = forward_cut_pw(out, clique)
print(f"\nforward cut: {len(cut)} edges, "
      f"verified: {verify_cut(h, cut).ok}")
print(f"decoded back: {decode_pw(out, cut)}")

# minimality probe: how many single edges could be dropped? (reported only;
# the construction does not promise edge-minimality)
redundant = sum(1 for e in cut if verify_cut(h, cut - {e}).ok)
print(f"minimality probe: {redundant} of {len(cut)} edges individually redundant")

pd = build_pw_witness(out)
verdict = verify_path_decomposition(h.graph, pd)
print(f"\npath decomposition: {len(pd.bags)} bags, width {verdict.width} "
      f"<= 2k+11 = {2 * cq.k + 11}, valid: {verdict.ok}")
