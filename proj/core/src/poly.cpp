#include "sgh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sgh/iso.hpp"

namespace sgh {

bool Poly3::total() const {
  std::size_t want =
      static_cast<std::size_t>(target.n) * target.n * target.n;
  if (table.size() != want) return false;
  for (int v : table)
    if (v < 0 || v >= target.n) return false;
  return true;
}

PolyProps parse_props(const std::string& csv) {
  PolyProps p;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    // trim surrounding spaces
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    token = (b == std::string::npos) ? "" : token.substr(b, e - b + 1);
    if (token == "idempotent") p.idempotent = true;
    else if (token == "conservative") p.conservative = true;
    else if (token == "semi" || token == "semi-conservative" ||
             token == "semi_conservative") p.semi_conservative = true;
    else if (token == "wnu") p.wnu = true;
    else if (token == "nu3") p.nu3 = true;
    else if (token == "symmetric") p.symmetric = true;
    else if (token == "parity-symmetric" || token == "parity_symmetric")
      p.parity_symmetric = true;
    else
      throw std::invalid_argument("unknown polymorphism property: '" + token +
                                  "'");
  }
  return p;
}

std::string props_to_string(const PolyProps& p) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ',';
    out += name;
  };
  if (p.idempotent) add("idempotent");
  if (p.conservative) add("conservative");
  if (p.semi_conservative) add("semi");
  if (p.wnu) add("wnu");
  if (p.nu3) add("nu3");
  if (p.symmetric) add("symmetric");
  if (p.parity_symmetric) add("parity-symmetric");
  return out;
}

bool PropReport::all_ok() const {
  if (!polymorphism) return false;
  auto need = [](bool req, bool got) { return !req || got; };
  return need(requested.idempotent, holds.idempotent) &&
         need(requested.conservative, holds.conservative) &&
         need(requested.semi_conservative, holds.semi_conservative) &&
         need(requested.wnu, holds.wnu) && need(requested.nu3, holds.nu3) &&
         need(requested.symmetric, holds.symmetric) &&
         need(requested.parity_symmetric, holds.parity_symmetric);
}

namespace {

void validate_pairing(const std::vector<int>& pairing, int n,
                      const char* what) {
  if (static_cast<int>(pairing.size()) != n)
    throw std::invalid_argument(std::string(what) +
                                " pairing has the wrong length");
  for (int v = 0; v < n; ++v) {
    if (pairing[v] < 0 || pairing[v] >= n)
      throw std::invalid_argument(std::string(what) +
                                  " pairing maps outside the vertex set");
    if (pairing[pairing[v]] != v)
      throw std::invalid_argument(std::string(what) +
                                  " pairing is not an involution");
  }
}

std::vector<std::pair<int, int>> directed_edges(
    const std::vector<VertexSet>& adj, int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (VertexSet m = adj[u]; m;) {
      int v = first_vertex(m);
      m &= m - 1;
      out.emplace_back(u, v);
    }
  return out;
}

std::string name_triple(const BrGraph& h, const std::array<int, 3>& t) {
  return "(" + h.names[t[0]] + "," + h.names[t[1]] + "," + h.names[t[2]] + ")";
}

}  // namespace

PropReport check_props(const Poly3& f, const PolyProps& which,
                       const std::vector<int>* switch_pairing,
                       const std::vector<int>* parity_pairing) {
  if (!f.total())
    throw std::invalid_argument("polymorphism table is not total");
  const BrGraph& h = f.target;
  const int n = h.n;
  if (which.semi_conservative) {
    if (!switch_pairing)
      throw std::invalid_argument(
          "semi-conservative check needs a switch pairing");
    validate_pairing(*switch_pairing, n, "switch");
  }
  if (which.parity_symmetric) {
    if (!parity_pairing)
      throw std::invalid_argument(
          "parity-symmetric check needs a parity pairing");
    validate_pairing(*parity_pairing, n, "parity");
  }

  PropReport rep;
  rep.requested = which;

  auto fail = [&rep](std::string property, std::array<int, 3> x,
                     std::array<int, 3> y, int fx, int fy,
                     std::string detail) {
    PropFailure pf;
    pf.property = std::move(property);
    pf.x = x;
    pf.y = y;
    pf.fx = fx;
    pf.fy = fy;
    pf.detail = std::move(detail);
    rep.failures.push_back(std::move(pf));
  };

  // Edge preservation, exhaustively per colour over directed-edge triples.
  rep.polymorphism = true;
  for (int colour = 0; colour < 2; ++colour) {
    const auto& adj = colour == 0 ? h.blue : h.red;
    const char* cname = colour == 0 ? "blue" : "red";
    auto edges = directed_edges(adj, n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < edges.size(); ++i)
      for (std::size_t j = 0; ok && j < edges.size(); ++j)
        for (std::size_t k = 0; ok && k < edges.size(); ++k) {
          std::array<int, 3> x{{edges[i].first, edges[j].first,
                                edges[k].first}};
          std::array<int, 3> y{{edges[i].second, edges[j].second,
                                edges[k].second}};
          int fx = f.at(x[0], x[1], x[2]);
          int fy = f.at(y[0], y[1], y[2]);
          if (!(adj[fx] & vbit(fy))) {
            ok = false;
            fail(std::string("polymorphism(") + cname + ")", x, y, fx, fy,
                 "images " + h.names[fx] + "," + h.names[fy] + " of the " +
                     cname + "-adjacent triples " + name_triple(h, x) + "," +
                     name_triple(h, y) + " are not " + cname + "-adjacent");
          }
        }
    if (!ok) rep.polymorphism = false;
  }

  if (which.idempotent) {
    rep.holds.idempotent = true;
    for (int x = 0; x < n && rep.holds.idempotent; ++x)
      if (f.at(x, x, x) != x) {
        rep.holds.idempotent = false;
        fail("idempotent", {{x, x, x}}, {{x, x, x}}, f.at(x, x, x), x,
             "f(" + h.names[x] + ",...)=" + h.names[f.at(x, x, x)] +
                 " != " + h.names[x]);
      }
  }

  if (which.conservative) {
    rep.holds.conservative = true;
    for (int x = 0; x < n && rep.holds.conservative; ++x)
      for (int y = 0; y < n && rep.holds.conservative; ++y)
        for (int z = 0; z < n; ++z) {
          int v = f.at(x, y, z);
          if (v != x && v != y && v != z) {
            rep.holds.conservative = false;
            fail("conservative", {{x, y, z}}, {{x, y, z}}, v, -1,
                 "f" + name_triple(h, {{x, y, z}}) + "=" + h.names[v] +
                     " leaves the argument set");
            break;
          }
        }
  }

  if (which.semi_conservative) {
    const auto& s = *switch_pairing;
    rep.holds.semi_conservative = true;
    for (int x = 0; x < n && rep.holds.semi_conservative; ++x)
      for (int y = 0; y < n && rep.holds.semi_conservative; ++y)
        for (int z = 0; z < n; ++z) {
          int v = f.at(x, y, z);
          if (v != x && v != y && v != z && v != s[x] && v != s[y] &&
              v != s[z]) {
            rep.holds.semi_conservative = false;
            fail("semi-conservative", {{x, y, z}}, {{x, y, z}}, v, -1,
                 "f" + name_triple(h, {{x, y, z}}) + "=" + h.names[v] +
                     " leaves the switch closure of the argument set");
            break;
          }
        }
  }

  if (which.wnu) {
    // Weak near-unanimity here includes idempotence alongside the agreement
    // of the three one-off patterns.
    rep.holds.wnu = true;
    for (int x = 0; x < n && rep.holds.wnu; ++x) {
      if (f.at(x, x, x) != x) {
        rep.holds.wnu = false;
        fail("wnu", {{x, x, x}}, {{x, x, x}}, f.at(x, x, x), x,
             "not idempotent at " + h.names[x]);
        break;
      }
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        int a = f.at(x, x, y), b = f.at(x, y, x), c = f.at(y, x, x);
        if (a != b || b != c) {
          rep.holds.wnu = false;
          fail("wnu", {{x, x, y}}, {{x, y, x}}, a, b,
               "one-off patterns of (" + h.names[x] + "," + h.names[y] +
                   ") disagree: " + h.names[a] + "," + h.names[b] + "," +
                   h.names[c]);
          break;
        }
      }
    }
  }

  if (which.nu3) {
    rep.holds.nu3 = true;
    for (int x = 0; x < n && rep.holds.nu3; ++x)
      for (int y = 0; y < n; ++y) {
        int a = f.at(x, x, y), b = f.at(x, y, x), c = f.at(y, x, x);
        if (a != x || b != x || c != x) {
          rep.holds.nu3 = false;
          int got = a != x ? a : (b != x ? b : c);
          fail("nu3", {{x, x, y}}, {{y, x, x}}, got, x,
               "near-unanimity fails on (" + h.names[x] + "," + h.names[y] +
                   "): got " + h.names[got] + " wanted " + h.names[x]);
          break;
        }
      }
  }

  if (which.symmetric) {
    rep.holds.symmetric = true;
    auto autos = automorphisms(h);
    for (const auto& sigma : autos) {
      if (!rep.holds.symmetric) break;
      for (int x = 0; x < n && rep.holds.symmetric; ++x)
        for (int y = 0; y < n && rep.holds.symmetric; ++y)
          for (int z = 0; z < n; ++z) {
            int lhs = f.at(sigma[x], sigma[y], sigma[z]);
            int rhs = sigma[f.at(x, y, z)];
            if (lhs != rhs) {
              rep.holds.symmetric = false;
              fail("symmetric", {{x, y, z}},
                   {{sigma[x], sigma[y], sigma[z]}}, f.at(x, y, z), lhs,
                   "does not commute with an automorphism at " +
                       name_triple(h, {{x, y, z}}));
              break;
            }
          }
    }
  }

  if (which.parity_symmetric) {
    const auto& p = *parity_pairing;
    rep.holds.parity_symmetric = true;
    for (int x = 0; x < n && rep.holds.parity_symmetric; ++x)
      for (int y = 0; y < n && rep.holds.parity_symmetric; ++y)
        for (int z = 0; z < n; ++z) {
          if (f.at(p[x], p[y], p[z]) != p[f.at(x, y, z)]) {
            rep.holds.parity_symmetric = false;
            fail("parity-symmetric", {{x, y, z}}, {{p[x], p[y], p[z]}},
                 f.at(x, y, z), f.at(p[x], p[y], p[z]),
                 "does not commute with the parity switch at " +
                     name_triple(h, {{x, y, z}}));
            break;
          }
        }
  }

  return rep;
}

namespace {

// Complete backtracking search over one variable per ordered triple, with
// arc-consistency propagation of per-colour edge preservation. Values are
// tried ascending. Two variable orders are supported: triple-lexicographic,
// whose first solution is the lexicographically least table, and
// smallest-domain-first, which decides satisfiability much faster on
// refutation instances but in no canonical witness order. search_poly3
// decides with the latter and only then reruns lexicographically, so the
// returned witness keeps the documented canonical order.
class PolySearch {
 public:
  enum class Order { Lexicographic, SmallestDomain };

  PolySearch(const BrGraph& h, const PolyProps& req, const std::vector<int>* s,
             Order order = Order::Lexicographic)
      : h_(h),
        n_(h.n),
        nv_(static_cast<long long>(h.n) * h.n * h.n),
        req_(req),
        s_(s),
        order_(order) {}

  PolySearchResult run() {
    PolySearchResult result;
    if (!build_domains()) {
      result.exhausted = true;
      result.stats = stats_;
      return result;
    }
    std::vector<int> work;
    work.reserve(rep_ids_.size());
    for (int r : rep_ids_) work.push_back(r);
    if (!propagate(work)) {
      result.exhausted = true;
      result.stats = stats_;
      return result;
    }
    if (dfs(0)) {
      Poly3 out(h_);
      for (long long t = 0; t < nv_; ++t)
        out.table[t] = first_vertex(dom_[rep_[t]]);
      result.poly = std::move(out);
    } else {
      result.exhausted = true;
    }
    result.stats = stats_;
    return result;
  }

 private:
  long long idx(int x, int y, int z) const {
    return (static_cast<long long>(x) * n_ + y) * n_ + z;
  }

  bool build_domains() {
    rep_.resize(nv_);
    for (long long t = 0; t < nv_; ++t) rep_[t] = static_cast<int>(t);
    if (req_.wnu) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          if (x == y) continue;
          int m = static_cast<int>(
              std::min({idx(x, x, y), idx(x, y, x), idx(y, x, x)}));
          rep_[idx(x, x, y)] = m;
          rep_[idx(x, y, x)] = m;
          rep_[idx(y, x, x)] = m;
        }
    }
    members_.assign(nv_, {});
    for (long long t = 0; t < nv_; ++t)
      members_[rep_[t]].push_back(static_cast<int>(t));
    rep_ids_.clear();
    for (long long t = 0; t < nv_; ++t)
      if (rep_[t] == t) rep_ids_.push_back(static_cast<int>(t));

    dom_.assign(nv_, full_set(n_));
    queued_.assign(nv_, 0);
    for (long long t = 0; t < nv_; ++t) {
      int x = static_cast<int>(t / (n_ * static_cast<long long>(n_)));
      int y = static_cast<int>((t / n_) % n_);
      int z = static_cast<int>(t % n_);
      VertexSet m = full_set(n_);
      if (req_.conservative) m &= vbit(x) | vbit(y) | vbit(z);
      if (req_.semi_conservative)
        m &= vbit(x) | vbit(y) | vbit(z) | vbit((*s_)[x]) | vbit((*s_)[y]) |
             vbit((*s_)[z]);
      if ((req_.idempotent || req_.wnu || req_.nu3) && x == y && y == z)
        m &= vbit(x);
      if (req_.nu3) {
        if (x == y) m &= vbit(x);
        else if (y == z) m &= vbit(y);
        else if (x == z) m &= vbit(x);
      }
      dom_[rep_[t]] &= m;
      if (!dom_[rep_[t]]) return false;
    }
    return true;
  }

  void shrink(int r, VertexSet nd) {
    trail_.push_back({r, dom_[r]});
    dom_[r] = nd;
  }

  // Re-filters the domains of all triples edge-adjacent to a changed one.
  bool propagate(std::vector<int>& work) {
    for (int r : work) queued_[r] = 1;
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      queued_[a] = 0;
      for (int member : members_[a]) {
        int x = static_cast<int>(member / (n_ * static_cast<long long>(n_)));
        int y = (member / n_) % n_;
        int z = member % n_;
        for (int colour = 0; colour < 2; ++colour) {
          const auto& adj = colour == 0 ? h_.blue : h_.red;
          for (VertexSet m1 = adj[x]; m1;) {
            int y1 = first_vertex(m1);
            m1 &= m1 - 1;
            for (VertexSet m2 = adj[y]; m2;) {
              int y2 = first_vertex(m2);
              m2 &= m2 - 1;
              for (VertexSet m3 = adj[z]; m3;) {
                int y3 = first_vertex(m3);
                m3 &= m3 - 1;
                int b = rep_[idx(y1, y2, y3)];
                VertexSet nd = 0;
                for (VertexSet dm = dom_[b]; dm;) {
                  int w = first_vertex(dm);
                  dm &= dm - 1;
                  if (adj[w] & dom_[a]) nd |= vbit(w);
                }
                if (nd != dom_[b]) {
                  shrink(b, nd);
                  if (!nd) {
                    ++stats_.wipeouts;
                    for (int r : work) queued_[r] = 0;
                    work.clear();
                    return false;
                  }
                  if (!queued_[b]) {
                    queued_[b] = 1;
                    work.push_back(b);
                  }
                }
              }
            }
          }
        }
      }
    }
    return true;
  }

  // Returns the variable to branch on, or -1 when all are singletons.
  int pick_variable(long long lex_from) const {
    if (order_ == Order::Lexicographic) {
      for (long long t = lex_from; t < nv_; ++t)
        if (set_size(dom_[rep_[t]]) > 1) return rep_[t];
      return -1;
    }
    int best = -1, best_size = 0;
    for (int r : rep_ids_) {
      int size = set_size(dom_[r]);
      if (size > 1 && (best < 0 || size < best_size)) {
        best = r;
        best_size = size;
        if (size == 2) break;  // cannot do better
      }
    }
    return best;
  }

  bool dfs(long long lex_from) {
    long long next = lex_from;
    if (order_ == Order::Lexicographic)
      while (next < nv_ && set_size(dom_[rep_[next]]) == 1) ++next;
    int r = pick_variable(next);
    if (r < 0) return true;
    ++stats_.nodes;
    for (VertexSet m = dom_[r]; m;) {
      int v = first_vertex(m);
      m &= m - 1;
      std::size_t mark = trail_.size();
      shrink(r, vbit(v));
      std::vector<int> work{r};
      if (propagate(work) && dfs(next)) return true;
      while (trail_.size() > mark) {
        dom_[trail_.back().var] = trail_.back().old;
        trail_.pop_back();
      }
    }
    return false;
  }

  struct TrailEntry {
    int var;
    VertexSet old;
  };

  const BrGraph& h_;
  int n_;
  long long nv_;
  PolyProps req_;
  const std::vector<int>* s_;

  std::vector<int> rep_;                   // triple -> canonical variable id
  std::vector<std::vector<int>> members_;  // variable id -> tied triples
  std::vector<int> rep_ids_;
  std::vector<VertexSet> dom_;
  std::vector<char> queued_;
  std::vector<TrailEntry> trail_;
  PolySearchStats stats_;
  Order order_;
};

}  // namespace

PolySearchResult search_poly3(const BrGraph& target, const PolyProps& required,
                              const std::vector<int>* switch_pairing) {
  if (required.symmetric || required.parity_symmetric)
    throw std::invalid_argument(
        "symmetric and parity-symmetric are check-only properties; they "
        "cannot be required in the search");
  if (required.semi_conservative) {
    if (!switch_pairing)
      throw std::invalid_argument(
          "semi-conservative search needs a switch pairing");
    validate_pairing(*switch_pairing, target.n, "switch");
  }
  if (target.n == 0) {
    PolySearchResult r;
    r.poly = Poly3(target);
    return r;
  }
  // Decide satisfiability with the fail-first order, then rerun
  // lexicographically for the canonical witness; the second run only ever
  // walks a satisfiable (hence well-propagating) space.
  PolySearch decide(target, required, switch_pairing,
                    PolySearch::Order::SmallestDomain);
  PolySearchResult result = decide.run();
  if (!result.poly) return result;
  PolySearch canonical(target, required, switch_pairing,
                       PolySearch::Order::Lexicographic);
  PolySearchResult ordered = canonical.run();
  if (!ordered.poly)
    throw std::logic_error(
        "polymorphism search disagreed with itself across variable orders");
  ordered.stats.nodes += result.stats.nodes;
  ordered.stats.wipeouts += result.stats.wipeouts;
  PropReport rep = check_props(*ordered.poly, required, switch_pairing);
  if (!rep.all_ok())
    throw std::logic_error(
        "polymorphism search returned a witness that fails verification");
  return ordered;
}

PolySearchResult search_poly3(const Graph& target, const PolyProps& required,
                              const std::vector<int>* switch_pairing) {
  return search_poly3(as_purple(target), required, switch_pairing);
}

std::string to_table_text(const Poly3& f) {
  if (!f.total())
    throw std::invalid_argument("polymorphism table is not total");
  std::ostringstream out;
  const auto& names = f.target.names;
  for (int x = 0; x < f.target.n; ++x)
    for (int y = 0; y < f.target.n; ++y)
      for (int z = 0; z < f.target.n; ++z)
        out << "f " << names[x] << ' ' << names[y] << ' ' << names[z]
            << " -> " << names[f.at(x, y, z)] << '\n';
  return out.str();
}

Poly3 parse_poly3(const BrGraph& target, const std::string& text) {
  Poly3 f(target);
  std::vector<char> seen(f.table.size(), 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    // Tokenise, remembering 1-based start columns.
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens[0].first != "f")
      throw ParseError("expected 'f'", line_no, tokens[0].second);
    if (tokens.size() != 6)
      throw ParseError("expected 'f <x1> <x2> <x3> -> <y>'", line_no,
                       tokens[0].second);
    if (tokens[4].first != "->")
      throw ParseError("expected '->'", line_no, tokens[4].second);
    int ids[4];
    int slot = 0;
    for (int t : {1, 2, 3, 5}) {
      auto v = find_vertex(target.names, tokens[t].first);
      if (!v)
        throw ParseError("unknown vertex name '" + tokens[t].first + "'",
                         line_no, tokens[t].second);
      ids[slot++] = *v;
    }
    std::size_t entry = f.index(ids[0], ids[1], ids[2]);
    if (seen[entry])
      throw ParseError("duplicate table entry", line_no, tokens[1].second);
    seen[entry] = 1;
    f.table[entry] = ids[3];
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("polymorphism table is not total");
  return f;
}

std::vector<int> parse_pairing(const std::vector<std::string>& names,
                               const std::string& text) {
  std::vector<int> pairing(names.size());
  for (std::size_t v = 0; v < names.size(); ++v)
    pairing[v] = static_cast<int>(v);
  std::vector<char> mentioned(names.size(), 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens[0].first != "pair")
      throw ParseError("expected 'pair'", line_no, tokens[0].second);
    if (tokens.size() != 3)
      throw ParseError("expected 'pair <u> <v>'", line_no, tokens[0].second);
    int ids[2];
    for (int t : {1, 2}) {
      auto v = find_vertex(names, tokens[t].first);
      if (!v)
        throw ParseError("unknown vertex name '" + tokens[t].first + "'",
                         line_no, tokens[t].second);
      ids[t - 1] = *v;
    }
    for (int t = 0; t < 2; ++t)
      if (mentioned[ids[t]])
        throw ParseError("vertex '" + tokens[t + 1].first +
                             "' is already paired",
                         line_no, tokens[t + 1].second);
    pairing[ids[0]] = ids[1];
    pairing[ids[1]] = ids[0];
    mentioned[ids[0]] = 1;
    mentioned[ids[1]] = 1;
  }
  return pairing;
}

Poly3 lift_to_bipartite(const Poly3& f, const ProductP& prod) {
  if (!f.total())
    throw std::invalid_argument("polymorphism table is not total");
  if (!(prod.base == f.target))
    throw std::invalid_argument(
        "the product does not cover the table's target graph");
  Poly3 F(prod.graph);
  const int N = prod.graph.n;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) {
        int ia = prod.project_side(a), ib = prod.project_side(b),
            ic = prod.project_side(c);
        int value;
        if (ia == ib && ib == ic) {
          value = prod.at(f.at(prod.project_vertex(a), prod.project_vertex(b),
                               prod.project_vertex(c)),
                          ia);
        } else {
          int majority = (ia + ib + ic >= 2) ? 1 : 0;
          value = (ia == majority) ? a : (ib == majority ? b : c);
        }
        F.set(a, b, c, value);
      }
  return F;
}

Poly3 project_from_bipartite(const Poly3& F, const ProductP& prod) {
  if (!F.total())
    throw std::invalid_argument("polymorphism table is not total");
  if (!(F.target == prod.graph))
    throw std::invalid_argument("the table is not over the given product");
  const int N = prod.graph.n;
  std::vector<int> p = prod.parity_switch_perm();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        if (F.at(p[a], p[b], p[c]) != p[F.at(a, b, c)])
          throw std::invalid_argument(
              "the table does not commute with the parity switch");
  Poly3 f(prod.base);
  for (int x = 0; x < prod.base_n; ++x)
    for (int y = 0; y < prod.base_n; ++y)
      for (int z = 0; z < prod.base_n; ++z)
        f.set(x, y, z, prod.project_vertex(F.at(prod.at(x, 0), prod.at(y, 0),
                                                prod.at(z, 0))));
  return f;
}

}  // namespace sgh
