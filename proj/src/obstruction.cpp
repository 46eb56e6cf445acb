#include <algorithm>

#include "cak/chordal.hpp"
#include "cak/cycles.hpp"

namespace cak {

namespace {

// Symbols for the chosen vertices; templates are written over these.
enum Sym { U0, U1, V00, V01, V10, V11, W00, W01, W10, W11, WK0, WK1 };

struct Template {
  int pattern;
  const char* label;
  std::vector<Sym> roles;  // fixture index order
};

std::vector<Template> case_templates(int which) {
  const std::vector<Sym> base = {U0, U1, V00, V01, V10, V11, W00, W01, W10, W11};
  auto with = [&](std::initializer_list<std::pair<int, Sym>> repl, std::initializer_list<Sym> extra) {
    auto r = base;
    for (auto [i, s] : repl) r[i] = s;
    r.insert(r.end(), extra);
    return r;
  };
  switch (which) {
    case 1:
      return {{1, "1", base}, {2, "1(a)", base}, {3, "1(b)", base}};
    case 2:
      return {{4, "2", with({}, {WK1})}, {3, "2", with({{3, WK1}}, {})}, {2, "2", with({{5, WK1}}, {})}};
    default:
      return {{5, "3(i)", with({}, {WK0, WK1})},
              {6, "3(ii)", with({}, {WK0, WK1})},
              {7, "3(iii)", with({}, {WK0, WK1})},
              {2, "3(iv)", with({{4, WK0}}, {})},
              {3, "3(v)", with({{4, WK0}}, {})},
              {4, "3(vi)", with({{4, WK0}}, {WK1})},
              {1, "3(vii)", with({{4, WK0}, {5, WK1}}, {})},
              {2, "3(viii)", with({{4, WK0}, {5, WK1}}, {})},
              {1, "3(ix)", with({{3, WK1}, {4, WK0}}, {})},
              {3, "3(x)", with({{3, WK1}, {4, WK0}}, {})}};
  }
}

// Exchange the first index (0 <-> 1 on u, v, w) or the second (v, w and w_k).
Sym swap_first(Sym s) {
  switch (s) {
    case U0: return U1;
    case U1: return U0;
    case V00: return V10;
    case V10: return V00;
    case V01: return V11;
    case V11: return V01;
    case W00: return W10;
    case W10: return W00;
    case W01: return W11;
    case W11: return W01;
    default: return s;
  }
}

Sym swap_second(Sym s) {
  switch (s) {
    case V00: return V01;
    case V01: return V00;
    case V10: return V11;
    case V11: return V10;
    case W00: return W01;
    case W01: return W00;
    case W10: return W11;
    case W11: return W10;
    case WK0: return WK1;
    case WK1: return WK0;
    default: return s;
  }
}

[[noreturn]] void fail(const std::string& claim, const std::string& what) { throw InvariantViolation(claim, what); }

NodeSet complement(const NodeSet& s) {
  NodeSet all(s.capacity());
  for (int i = 0; i < s.capacity(); ++i)
    if (!s.contains(i)) all.insert(i);
  return all;
}

}  // namespace

Obstruction extract_obstruction(const Graph& g, const CliqueArrangement& a, const Bad2CycleWitness& w) {
  if (!a.chordal() || !is_strongly_chordal(g)) throw PreconditionError("extract_obstruction: graph is not strongly chordal");
  if (!verify_bad_2_cycle(a, w)) throw PreconditionError("extract_obstruction: not a bad 2-cycle");
  {
    auto best = find_bad_2_cycle(a);
    auto tsum = [&](const Bad2CycleWitness& x) { return a.node(x.terminals[0]).size() + a.node(x.terminals[1]).size(); };
    auto ssum = [&](const Bad2CycleWitness& x) { return a.node(x.starters[0]).size() + a.node(x.starters[1]).size(); };
    if (!best || tsum(*best) != tsum(w) || ssum(*best) != ssum(w))
      throw PreconditionError("extract_obstruction: bad 2-cycle is not extremal");
  }

  const std::array<VertexSet, 2> S = {a.node(w.starters[0]), a.node(w.starters[1])};
  const std::array<VertexSet, 2> T = {a.node(w.terminals[0]), a.node(w.terminals[1])};
  const VertexSet mid = a.node(w.middle);
  const auto allowed = complement(a.interval(S[0] | S[1], mid));

  ObstructionState st;
  std::array<std::array<VertexSet, 2>, 2> P, Q;

  // Claim 1: P_ij = Q_ij ∩ T_j on an avoiding path, with S_{1-i} ⊄ Q_ij.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      st.p[i][j] = st.q[i][j] = -1;
      for (int x = 0; x < a.node_count() && st.p[i][j] < 0; ++x) {
        const auto& X = a.node(x);
        if (!S[i].is_subset_of(X) || !X.is_subset_of(T[j]) || S[1 - i].is_subset_of(X) || X.is_subset_of(mid))
          continue;
        if (!allowed.contains(x)) continue;
        for (int s : a.sinks_above(x)) {
          if (S[1 - i].is_subset_of(a.node(s)) || (a.node(s) & T[j]) != X) continue;
          st.p[i][j] = x;
          st.q[i][j] = s;
          break;
        }
      }
      if (st.p[i][j] < 0) fail("claim-1", "no P-node for (" + std::to_string(i) + "," + std::to_string(j) + ")");
      P[i][j] = a.node(st.p[i][j]);
      Q[i][j] = a.node(st.q[i][j]);
      st.p_reduced[i][j] = P[i][j] - mid;
    }

  // Claims 2-4.
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      if (st.q[x / 2][x % 2] == st.q[y / 2][y % 2]) fail("claim-2", "two Q-nodes coincide");
  for (int i = 0; i < 2; ++i)
    if ((P[i][0] & P[i][1]) != S[i]) fail("claim-3", "P_i0 ∩ P_i1 differs from S_i");
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      if (!(P[0][j] & P[1][k]).is_subset_of(mid) || !(Q[0][j] & Q[1][k]).is_subset_of(mid))
        fail("claim-4", "cross intersection leaves T");

  // Claim 5.
  for (int i = 0; i < 2; ++i) {
    auto cand = S[i] - Q[1 - i][0] - Q[1 - i][1];
    if (cand.empty()) fail("claim-5", "no u-vertex");
    st.u[i] = cand.first();
  }

  // Claim 6: w_ij ∈ Q_ij \ P_ij with no neighbour in (Q_{1-i}0 ∪ Q_{1-i}1) \ Q_ij,
  // none in the other three reduced P-sets, and mutually distinct and non-adjacent.
  std::array<std::array<std::vector<int>, 2>, 2> wc;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto avoid = ((Q[1 - i][0] | Q[1 - i][1]) - Q[i][j]) | st.p_reduced[i][1 - j] | st.p_reduced[1 - i][j] |
                   st.p_reduced[1 - i][1 - j];
      avoid.insert(st.u[1 - i]);
      for (int x : Q[i][j] - P[i][j])
        if (!g.neighbors(x).intersects(avoid)) wc[i][j].push_back(x);
      if (wc[i][j].empty()) fail("claim-6", "no w-vertex candidate");
    }
  {
    auto compatible = [&](int x, int y) { return x != y && !g.adjacent(x, y); };
    auto pick = [&] {
      for (int a00 : wc[0][0])
        for (int a01 : wc[0][1]) {
          if (!compatible(a00, a01)) continue;
          for (int a10 : wc[1][0]) {
            if (!compatible(a00, a10) || !compatible(a01, a10)) continue;
            for (int a11 : wc[1][1])
              if (compatible(a00, a11) && compatible(a01, a11) && compatible(a10, a11)) {
                st.w = {{{a00, a01}, {a10, a11}}};
                return true;
              }
          }
        }
      return false;
    };
    if (!pick()) fail("claim-6", "no independent w-quadruple");
  }

  // Cliques V_i, D_j and which w_k are promised.
  const std::array<VertexSet, 2> V = {P[0][0] | P[0][1], P[1][0] | P[1][1]};
  const std::array<VertexSet, 2> D = {P[0][0] | P[1][1], P[0][1] | P[1][0]};
  std::array<bool, 2> need{false, false};
  for (int i = 0; i < 2; ++i) {
    st.v_clique[i] = is_clique(g, V[i]);
    st.d_clique[i] = is_clique(g, D[i]);
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (is_clique(g, V[i] | D[j])) need[(i + j + 1) % 2] = true;

  // Claim 8.
  VertexSet all_w;
  for (auto& row : st.w)
    for (int x : row) all_w.insert(x);
  std::array<std::vector<std::pair<int, int>>, 2> kc;  // (vertex, sink)
  for (int k = 0; k < 2; ++k) {
    if (!need[k]) continue;
    VertexSet avoid = T[1 - k] - mid;
    avoid.insert(st.w[0][1 - k]);
    avoid.insert(st.w[1][1 - k]);
    for (int s : a.sinks_above(w.terminals[k])) {
      auto cand = a.node(s) - P[0][k] - P[1][k] - T[1 - k] - all_w;
      for (int x : cand) {
        if (g.neighbors(x).intersects(avoid)) continue;
        if (g.adjacent(x, st.w[0][k]) && g.adjacent(x, st.w[1][k])) continue;
        kc[k].push_back({x, s});
      }
    }
    if (kc[k].empty()) fail("claim-8", "no w_" + std::to_string(k) + " candidate");
  }
  {
    bool found = !need[0] || !need[1];
    if (need[0] && need[1]) {
      for (auto [x0, s0] : kc[0]) {
        for (auto [x1, s1] : kc[1])
          if (x0 != x1 && !g.adjacent(x0, x1)) {
            st.wk = {x0, x1};
            st.t_prime = {s0, s1};
            found = true;
            break;
          }
        if (found) break;
      }
    } else {
      for (int k = 0; k < 2; ++k)
        if (need[k]) st.wk[k] = kc[k].front().first, st.t_prime[k] = kc[k].front().second;
    }
    if (!found) fail("claim-8", "no non-adjacent pair w_0, w_1");
  }

  const int cliques = st.v_clique[0] + st.v_clique[1] + st.d_clique[0] + st.d_clique[1];
  const int which = cliques <= 1 ? 1 : cliques == 2 ? 2 : 3;
  if (which == 2 && ((st.v_clique[0] && st.v_clique[1]) || (st.d_clique[0] && st.d_clique[1])))
    fail("theorem-10-case-2", "two parallel cliques force an induced C4");

  // Every template under the four index symmetries.
  std::vector<Template> templates;
  for (const auto& t : case_templates(which))
    for (int mask = 0; mask < 4; ++mask) {
      Template s = t;
      for (auto& r : s.roles) {
        if (mask & 1) r = swap_first(r);
        if (mask & 2) r = swap_second(r);
      }
      templates.push_back(std::move(s));
    }

  std::array<int, 12> val{};
  val[U0] = st.u[0];
  val[U1] = st.u[1];
  val[W00] = st.w[0][0];
  val[W01] = st.w[0][1];
  val[W10] = st.w[1][0];
  val[W11] = st.w[1][1];
  val[WK0] = st.wk[0];
  val[WK1] = st.wk[1];
  const auto c00 = st.p_reduced[0][0].members(), c01 = st.p_reduced[0][1].members(),
             c10 = st.p_reduced[1][0].members(), c11 = st.p_reduced[1][1].members();
  for (int v00 : c00)
    for (int v01 : c01)
      for (int v10 : c10)
        for (int v11 : c11) {
          val[V00] = v00;
          val[V01] = v01;
          val[V10] = v10;
          val[V11] = v11;
          for (const auto& t : templates) {
            PatternMatch m{t.pattern, {}};
            bool ok = true;
            for (Sym r : t.roles) {
              if (val[r] < 0) {
                ok = false;
                break;
              }
              m.map.push_back(val[r]);
            }
            if (!ok || !verify_pattern_match(g, m)) continue;
            st.v = {{{v00, v01}, {v10, v11}}};
            return {std::move(m), t.label, st};
          }
        }
  fail("theorem-10-case-" + std::to_string(which), "no vertex selection induces a forbidden pattern");
}

}  // namespace cak
